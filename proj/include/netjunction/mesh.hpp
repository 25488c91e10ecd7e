#pragma once

#include <cstddef>
#include <vector>

#include "netjunction/network.hpp"

namespace netjunction {

// Uniform grid with one common dx across the network. Interface l sits at
// x = l*dx; the junction is interface 0 on every arc, so incoming arc h with
// N_h cells covers interfaces -N_h..0 and an outgoing one covers 0..N_h.
class Mesh {
  public:
    // Arc lengths must be integer multiples of dx (1e-12 relative); anything
    // else is a configuration error, never a silent remesh.
    static Mesh with_dx(const Network& net, double dx);

    // Alternative when a target dx does not divide the arc length: pick the
    // cell count and derive dx = length / cells. Requires equal arc lengths.
    static Mesh with_cells_per_arc(const Network& net, std::size_t cells);

    double dx() const { return dx_; }
    std::size_t cells(std::size_t arc) const { return cells_[arc]; }
    const std::vector<std::size_t>& cells_per_arc() const { return cells_; }

    // Center of cell k (0-based from the arc's outer end for incoming arcs,
    // from the junction for outgoing ones), in network coordinates.
    double cell_center(const Network& net, std::size_t arc, std::size_t k) const;
    double cell_left_edge(const Network& net, std::size_t arc, std::size_t k) const;

  private:
    Mesh(double dx, std::vector<std::size_t> cells) : dx_(dx), cells_(std::move(cells)) {}
    double dx_ = 0.0;
    std::vector<std::size_t> cells_;
};

}  // namespace netjunction
