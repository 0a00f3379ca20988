#include "membridge/bridge/memport.hpp"

#include <sstream>

namespace membridge::bridge {

void MemportTable::check_slot(std::size_t slot) const {
    if (slot >= slots_.size()) {
        throw ControlError(CtrlStatus::BadSlot,
                           "memport slot " + std::to_string(slot) +
                               " >= capacity " + std::to_string(slots_.size()));
    }
}

void MemportTable::program(std::size_t slot, const MemportEntry& entry) {
    check_slot(slot);
    if (entry.enabled) {
        if (entry.match.size == 0) {
            throw ControlError(CtrlStatus::BadSlot, "enabled memport entry with empty match region");
        }
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (i == slot || !slots_[i].enabled) continue;
            if (slots_[i].match.overlaps(entry.match)) {
                std::ostringstream os;
                os << "memport slot " << slot << " match region overlaps enabled slot " << i;
                throw ControlError(CtrlStatus::BadSlot, os.str());
            }
        }
    }
    // Drop any previous index entry for this slot.
    if (slots_[slot].enabled) index_.erase(slots_[slot].match.base);
    slots_[slot] = entry;
    if (entry.enabled) index_[entry.match.base] = slot;
}

void MemportTable::disable(std::size_t slot) {
    check_slot(slot);
    if (slots_[slot].enabled) {
        index_.erase(slots_[slot].match.base);
        slots_[slot].enabled = false;
    }
}

std::optional<std::size_t> MemportTable::free_slot() const {
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (!slots_[i].enabled) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> MemportTable::lookup_slot(bus::PhysAddr addr) const {
    auto it = index_.upper_bound(addr);
    if (it == index_.begin()) return std::nullopt;
    --it;
    const MemportEntry& e = slots_[it->second];
    if (e.match.contains(addr)) return it->second;
    return std::nullopt;
}

std::optional<MemportEntry> MemportTable::lookup(bus::PhysAddr addr) const {
    auto slot = lookup_slot(addr);
    if (!slot) return std::nullopt;
    return slots_[*slot];
}

}  // namespace membridge::bridge
