#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "membridge/bus/types.hpp"

namespace membridge::bridge {

/// One runtime-programmable mapping: local match region -> (address offset,
/// destination transceiver, destination node, destination slave port).
struct MemportEntry {
    bus::AddressRegion match;
    std::int64_t offset = 0;
    std::uint8_t dest_transceiver = 0;
    std::uint8_t dest_node = 0;
    std::uint8_t dest_port = 0;
    bool enabled = false;
};

/// Recalculated physical address for the remote bus map.
inline bus::PhysAddr translate(const MemportEntry& e, bus::PhysAddr addr) {
    return static_cast<bus::PhysAddr>(addr + static_cast<std::uint64_t>(e.offset));
}

/// Per-bus-master table of memport entries. Enabled entries' match regions
/// are pairwise disjoint, so lookup resolves to at most one entry. Lookup
/// uses an interval index; a brute-force scan over slots gives the same
/// answer (the oracle the tests check against).
class MemportTable {
  public:
    MemportTable() = default;
    MemportTable(int master, std::size_t capacity)
        : master_(master), slots_(capacity) {}

    int master() const { return master_; }
    std::size_t capacity() const { return slots_.size(); }
    const std::vector<MemportEntry>& slots() const { return slots_; }

    /// Install `entry` in `slot`. Enforces slot bounds and, when the entry is
    /// enabled, disjointness against other enabled entries.
    void program(std::size_t slot, const MemportEntry& entry);

    void disable(std::size_t slot);

    /// Index of the first disabled slot, if any.
    std::optional<std::size_t> free_slot() const;

    /// The unique enabled entry whose match region contains `addr`, or
    /// nullopt (NoRoute: surfaces to the master as a decode error).
    std::optional<MemportEntry> lookup(bus::PhysAddr addr) const;

    std::optional<std::size_t> lookup_slot(bus::PhysAddr addr) const;

  private:
    void check_slot(std::size_t slot) const;

    int master_ = 0;
    std::vector<MemportEntry> slots_;
    std::map<bus::PhysAddr, std::size_t> index_;  // base -> slot, enabled only
};

}  // namespace membridge::bridge
