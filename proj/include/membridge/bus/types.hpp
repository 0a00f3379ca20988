#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "membridge/errors.hpp"
#include "membridge/sim/time.hpp"

namespace membridge::bus {

using PhysAddr = std::uint64_t;

/// Half-open byte range [base, base + size).
struct AddressRegion {
    PhysAddr base = 0;
    std::uint64_t size = 0;

    PhysAddr end() const { return base + size; }
    bool contains(PhysAddr a) const { return a >= base && a - base < size; }
    bool contains(const AddressRegion& r) const {
        return r.size > 0 && r.base >= base && r.end() <= end();
    }
    bool overlaps(const AddressRegion& r) const {
        return size > 0 && r.size > 0 && base < r.end() && r.base < end();
    }
    bool operator==(const AddressRegion& r) const {
        return base == r.base && size == r.size;
    }
};

/// The five split-transaction bus channels. Request channels flow
/// master->slave; ReadData and WriteResp flow slave->master, so reads and
/// writes genuinely overlap.
enum class BusChannel : std::uint8_t {
    ReadReq = 0,
    WriteReq = 1,
    WriteData = 2,
    ReadData = 3,
    WriteResp = 4,
};

constexpr int kChannelCount = 5;

constexpr bool is_request_channel(BusChannel c) {
    return c == BusChannel::ReadReq || c == BusChannel::WriteReq ||
           c == BusChannel::WriteData;
}

const char* to_string(BusChannel c);

enum class TxnKind : std::uint8_t { Read, Write };

/// A read/write burst issued by a master against a physical address range.
struct Transaction {
    std::uint64_t id = 0;
    int node = 0;
    int master = 0;
    TxnKind kind = TxnKind::Read;
    PhysAddr addr = 0;
    std::uint32_t beat_bytes = 8;
    std::uint32_t burst_len = 1;
    sim::TimePs issue_time = 0;

    std::uint64_t total_bytes() const {
        return std::uint64_t(beat_bytes) * burst_len;
    }
    AddressRegion range() const { return {addr, total_bytes()}; }
};

/// Piggy-backed forwarding information: 8-bit destination node plus 8-bit
/// destination port (slave port on request channels, master port on response
/// channels). 16 bits bounds the fabric at 256 nodes x 256 ports.
struct RouteTag {
    std::uint8_t node = 0;
    std::uint8_t port = 0;
    bool operator==(const RouteTag& o) const {
        return node == o.node && port == o.port;
    }
};

/// Smallest forwarded unit. Payloads are descriptors (sizes only); the
/// simulator tracks timing and counts, never memory contents.
struct Flit {
    BusChannel channel = BusChannel::ReadReq;
    std::uint8_t src_node = 0;
    std::uint8_t src_master = 0;  // source tag
    std::uint64_t txn_id = 0;
    std::uint32_t beat_index = 0;
    std::uint32_t burst_len = 1;  // carried on request flits for the slave
    std::uint32_t payload_bytes = 0;
    bool last = false;
    RouteTag route;
    PhysAddr addr = 0;  // request channels carry the (translated) address
};

/// Packed 64-bit flit header: the wire format for the piggy-backed routing
/// tag and bookkeeping fields.
///   [63:48] route (node<<8 | port)   [47:32] txn id (low 16 bits)
///   [31:20] beat index               [19:12] source master tag
///   [11:4]  source node              [3:1]   channel        [0] last
std::uint64_t pack_header(const Flit& f);
Flit unpack_header(std::uint64_t header);

/// Ordered (region -> endpoint) map of a bus. Regions are pairwise disjoint,
/// so any address resolves to at most one endpoint.
class MemoryMap {
  public:
    void add(const AddressRegion& region, int endpoint);
    std::optional<int> lookup(PhysAddr a) const;

    /// Endpoint serving the whole range. Throws UnmappedAddressError if the
    /// range is unmapped or spans regions.
    int lookup_range(const AddressRegion& r) const;

    const std::vector<std::pair<AddressRegion, int>>& entries() const {
        return entries_;
    }

  private:
    std::vector<std::pair<AddressRegion, int>> entries_;  // sorted by base
};

/// Fixed-latency, bandwidth-capped queue standing in for a DDR controller
/// port. No bank/row modeling: local DDR is a black-box baseline.
struct LocalMemoryModel {
    sim::TimePs latency_ps = 100'000;
    std::uint64_t bandwidth_bytes_per_s = 2ull << 30;
    std::uint32_t max_outstanding = 16;

    sim::TimePs data_time(std::uint64_t bytes) const {
        if (bandwidth_bytes_per_s == 0) return 0;
        using u128 = unsigned __int128;
        return static_cast<sim::TimePs>(
            (u128(bytes) * sim::kPsPerSec + bandwidth_bytes_per_s / 2) /
            bandwidth_bytes_per_s);
    }
};

}  // namespace membridge::bus
