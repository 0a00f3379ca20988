#include "membridge/ctrl/free_pool.hpp"

#include <algorithm>
#include <sstream>

#include "membridge/errors.hpp"

namespace membridge::ctrl {

namespace {
std::uint64_t align_up(std::uint64_t v, std::uint64_t align) {
    if (align <= 1) return v;
    const std::uint64_t rem = v % align;
    return rem == 0 ? v : v + (align - rem);
}
}  // namespace

std::optional<bus::AddressRegion> FreePool::allocate(std::uint64_t size, std::uint64_t align) {
    if (size == 0) return std::nullopt;
    for (std::size_t i = 0; i < free_.size(); ++i) {
        const bus::AddressRegion r = free_[i];
        const std::uint64_t start = align_up(r.base, align);
        if (start < r.base || start >= r.end()) continue;
        const std::uint64_t avail = r.end() - start;
        if (avail < size) continue;
        bus::AddressRegion out{start, size};
        // Carve: possible leading fragment from alignment, trailing remainder.
        std::vector<bus::AddressRegion> repl;
        if (start > r.base) repl.push_back({r.base, start - r.base});
        if (start + size < r.end()) repl.push_back({start + size, r.end() - (start + size)});
        free_.erase(free_.begin() + static_cast<std::ptrdiff_t>(i));
        free_.insert(free_.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
        return out;
    }
    return std::nullopt;
}

void FreePool::release(const bus::AddressRegion& r) {
    if (r.size == 0) return;
    for (const auto& f : free_) {
        if (f.overlaps(r)) {
            std::ostringstream os;
            os << "double free: region [0x" << std::hex << r.base << ", 0x" << r.end()
               << ") overlaps free space";
            throw SimError(os.str());
        }
    }
    auto it = std::upper_bound(free_.begin(), free_.end(), r,
                               [](const bus::AddressRegion& a, const bus::AddressRegion& b) {
                                   return a.base < b.base;
                               });
    it = free_.insert(it, r);
    // Coalesce with successor, then predecessor.
    if (auto next = it + 1; next != free_.end() && it->end() == next->base) {
        it->size += next->size;
        free_.erase(next);
    }
    if (it != free_.begin()) {
        auto prev = it - 1;
        if (prev->end() == it->base) {
            prev->size += it->size;
            free_.erase(it);
        }
    }
}

std::uint64_t FreePool::total_free() const {
    std::uint64_t sum = 0;
    for (const auto& r : free_) sum += r.size;
    return sum;
}

}  // namespace membridge::ctrl
