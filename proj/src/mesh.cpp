#include "netjunction/mesh.hpp"

#include <cmath>
#include <sstream>

#include "netjunction/errors.hpp"

namespace netjunction {

Mesh Mesh::with_dx(const Network& net, double dx) {
    if (!(dx > 0.0)) throw config_error("mesh needs dx > 0");
    std::vector<std::size_t> cells;
    cells.reserve(net.arc_count());
    for (std::size_t h = 0; h < net.arc_count(); ++h) {
        double length = net.arc(h).length;
        auto n = static_cast<long long>(std::llround(length / dx));
        if (n < 2 || std::abs(static_cast<double>(n) * dx - length) > 1e-12 * length) {
            std::ostringstream msg;
            msg << "arc " << h << " length " << length << " is not a multiple (>= 2) of dx "
                << dx;
            throw config_error(msg.str());
        }
        cells.push_back(static_cast<std::size_t>(n));
    }
    return Mesh(dx, std::move(cells));
}

Mesh Mesh::with_cells_per_arc(const Network& net, std::size_t n) {
    if (n < 2) throw config_error("mesh needs at least 2 cells per arc");
    double length = net.arc(0).length;
    for (std::size_t h = 1; h < net.arc_count(); ++h)
        if (net.arc(h).length != length)
            throw config_error("cells_per_arc requires equal arc lengths; give dx instead");
    return Mesh(length / static_cast<double>(n),
                std::vector<std::size_t>(net.arc_count(), n));
}

double Mesh::cell_left_edge(const Network& net, std::size_t arc, std::size_t k) const {
    // Products of signed integer indices with dx, never running sums, so every
    // edge is reproducible regardless of traversal order.
    if (net.is_incoming(arc)) {
        auto l = -static_cast<double>(cells_[arc]) + static_cast<double>(k);
        return l * dx_;
    }
    return static_cast<double>(k) * dx_;
}

double Mesh::cell_center(const Network& net, std::size_t arc, std::size_t k) const {
    if (net.is_incoming(arc)) {
        auto l = -static_cast<double>(cells_[arc]) + static_cast<double>(k);
        return (l + 0.5) * dx_;
    }
    return (static_cast<double>(k) + 0.5) * dx_;
}

}  // namespace netjunction
