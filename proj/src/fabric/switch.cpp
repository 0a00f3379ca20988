#include "membridge/fabric/switch.hpp"

#include <set>
#include <string>

namespace membridge::fabric {

void validate_port_map(const PortMap& map, int port_count) {
    std::set<int> outputs;
    for (const auto& [in, out] : map) {
        if (in < 0 || in >= port_count || out < 0 || out >= port_count) {
            throw InvalidMapError("port map entry " + std::to_string(in) + "->" +
                                  std::to_string(out) + " outside 0.." +
                                  std::to_string(port_count - 1));
        }
        if (!outputs.insert(out).second) {
            throw InvalidMapError("port map is not injective: output " +
                                  std::to_string(out) + " has two inputs");
        }
    }
}

}  // namespace membridge::fabric
