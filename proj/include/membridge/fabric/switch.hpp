#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "membridge/errors.hpp"
#include "membridge/sim/time.hpp"

namespace membridge::fabric {

/// Port map of a circuit switch: a partial bijection input -> output.
using PortMap = std::map<int, int>;

/// Throws InvalidMapError unless `map` is injective and within port bounds.
void validate_port_map(const PortMap& map, int port_count);

/// Transparent, unbuffered circuit switch. A circuit is exclusive, so the
/// fabric is contention-free by construction; all sharing happens at bridge
/// arbiters. The switch never reads the routing tag.
class CircuitSwitch {
  public:
    CircuitSwitch() = default;
    CircuitSwitch(std::string name, int port_count, sim::TimePs traversal_ps,
                  sim::TimePs reconfigure_ps)
        : name_(std::move(name)),
          port_count_(port_count),
          traversal_ps_(traversal_ps),
          reconfigure_ps_(reconfigure_ps) {}

    const std::string& name() const { return name_; }
    int port_count() const { return port_count_; }
    sim::TimePs traversal_ps() const { return traversal_ps_; }
    sim::TimePs reconfigure_ps() const { return reconfigure_ps_; }
    const PortMap& port_map() const { return map_; }

    /// Validate and stage `map`; the caller commits it at
    /// now + reconfigure_ps (make-before-break: forwarding decisions made
    /// before the commit follow the old map).
    sim::TimePs configure(const PortMap& map, sim::TimePs now) {
        validate_port_map(map, port_count_);
        pending_ = map;
        return now + reconfigure_ps_;
    }

    void commit_pending() {
        if (pending_) {
            map_ = *pending_;
            pending_.reset();
        }
    }

    /// Output port for a flit arriving on `in`, per the current map.
    /// Returns nullopt when the input port is unmapped (NoCircuit).
    std::optional<int> forward(int in) const {
        auto it = map_.find(in);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

  private:
    std::string name_;
    int port_count_ = 0;
    sim::TimePs traversal_ps_ = 0;
    sim::TimePs reconfigure_ps_ = 0;
    PortMap map_;
    std::optional<PortMap> pending_;
};

}  // namespace membridge::fabric
