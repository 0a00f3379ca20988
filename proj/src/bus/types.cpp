#include "membridge/bus/types.hpp"

#include <algorithm>
#include <sstream>

namespace membridge::bus {

const char* to_string(BusChannel c) {
    switch (c) {
        case BusChannel::ReadReq: return "READ_REQ";
        case BusChannel::WriteReq: return "WRITE_REQ";
        case BusChannel::WriteData: return "WRITE_DATA";
        case BusChannel::ReadData: return "READ_DATA";
        case BusChannel::WriteResp: return "WRITE_RESP";
    }
    return "?";
}

std::uint64_t pack_header(const Flit& f) {
    std::uint64_t h = 0;
    h |= std::uint64_t(f.route.node) << 56;
    h |= std::uint64_t(f.route.port) << 48;
    h |= (f.txn_id & 0xFFFFull) << 32;
    h |= std::uint64_t(f.beat_index & 0xFFFu) << 20;
    h |= std::uint64_t(f.src_master) << 12;
    h |= std::uint64_t(f.src_node) << 4;
    h |= std::uint64_t(static_cast<std::uint8_t>(f.channel) & 0x7u) << 1;
    h |= f.last ? 1u : 0u;
    return h;
}

Flit unpack_header(std::uint64_t h) {
    Flit f;
    f.route.node = static_cast<std::uint8_t>(h >> 56);
    f.route.port = static_cast<std::uint8_t>(h >> 48);
    f.txn_id = (h >> 32) & 0xFFFFull;
    f.beat_index = static_cast<std::uint32_t>((h >> 20) & 0xFFFu);
    f.src_master = static_cast<std::uint8_t>((h >> 12) & 0xFFu);
    f.src_node = static_cast<std::uint8_t>((h >> 4) & 0xFFu);
    f.channel = static_cast<BusChannel>((h >> 1) & 0x7u);
    f.last = (h & 1u) != 0;
    return f;
}

void MemoryMap::add(const AddressRegion& region, int endpoint) {
    if (region.size == 0) {
        throw UnmappedAddressError("empty region in memory map");
    }
    for (const auto& [r, ep] : entries_) {
        if (r.overlaps(region)) {
            std::ostringstream os;
            os << "region [0x" << std::hex << region.base << ", 0x"
               << region.end() << ") overlaps existing map entry";
            throw UnmappedAddressError(os.str());
        }
    }
    entries_.emplace_back(region, endpoint);
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first.base < b.first.base; });
}

std::optional<int> MemoryMap::lookup(PhysAddr a) const {
    auto it = std::upper_bound(
        entries_.begin(), entries_.end(), a,
        [](PhysAddr v, const auto& e) { return v < e.first.base; });
    if (it == entries_.begin()) return std::nullopt;
    --it;
    if (it->first.contains(a)) return it->second;
    return std::nullopt;
}

int MemoryMap::lookup_range(const AddressRegion& r) const {
    auto first = lookup(r.base);
    if (!first) {
        std::ostringstream os;
        os << "address 0x" << std::hex << r.base << " is unmapped";
        throw UnmappedAddressError(os.str());
    }
    auto lastb = lookup(r.end() - 1);
    if (!lastb || *lastb != *first) {
        std::ostringstream os;
        os << "range [0x" << std::hex << r.base << ", 0x" << r.end()
           << ") spans map regions";
        throw UnmappedAddressError(os.str());
    }
    return *first;
}

}  // namespace membridge::bus
