#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "membridge/bus/types.hpp"

namespace membridge::ctrl {

/// Address-ordered free list with first-fit allocation and coalescing on
/// release. Deterministic: allocate -> free -> allocate replays identically.
class FreePool {
  public:
    FreePool() = default;
    explicit FreePool(const bus::AddressRegion& whole) { free_ = {whole}; }

    /// First free region that fits `size` at `align` alignment (first-fit,
    /// lowest address). Returns the carved region, or nullopt (pool
    /// unchanged) when nothing fits.
    std::optional<bus::AddressRegion> allocate(std::uint64_t size, std::uint64_t align = 1);

    /// Return a previously allocated region; coalesces with adjacent free
    /// space. The region must be disjoint from everything currently free.
    void release(const bus::AddressRegion& r);

    std::uint64_t total_free() const;
    const std::vector<bus::AddressRegion>& regions() const { return free_; }

  private:
    std::vector<bus::AddressRegion> free_;  // sorted by base, disjoint, non-adjacent
};

}  // namespace membridge::ctrl
