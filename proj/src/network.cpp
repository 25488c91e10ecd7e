#include "netjunction/network.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netjunction/errors.hpp"

namespace netjunction {

Network::Network(std::vector<Arc> arcs) {
    std::stable_partition(arcs.begin(), arcs.end(),
                          [](const Arc& a) { return a.direction == ArcDirection::incoming; });
    std::size_t incoming = 0;
    for (const Arc& a : arcs)
        if (a.direction == ArcDirection::incoming) ++incoming;
    if (incoming == 0 || incoming == arcs.size())
        throw config_error("network needs at least one incoming and one outgoing arc");

    rho_max_ = arcs.front().flux.rho_max();
    for (std::size_t h = 0; h < arcs.size(); ++h) {
        const Arc& a = arcs[h];
        if (!(a.length > 0.0)) {
            std::ostringstream msg;
            msg << "arc " << h << " has non-positive length " << a.length;
            throw config_error(msg.str());
        }
        if (a.flux.rho_max() != rho_max_) {
            std::ostringstream msg;
            msg << "arc " << h << " has rho_max " << a.flux.rho_max() << " but the network uses "
                << rho_max_ << "; a single common jam density is required";
            throw config_error(msg.str());
        }
        max_lipschitz_ = std::max(max_lipschitz_, a.flux.lipschitz_bound());
    }
    incoming_ = incoming;
    arcs_ = std::move(arcs);
}

}  // namespace netjunction
