#pragma once

#include <cstddef>
#include <vector>

#include "netjunction/flux.hpp"

namespace netjunction {

enum class ArcDirection { incoming, outgoing };

// One road segment meeting the junction. Incoming arcs live on [-length, 0],
// outgoing arcs on [0, length]; x = 0 is the junction on every arc.
struct Arc {
    ArcDirection direction;
    double length;
    FluxModel flux;
};

// A star-shaped network: m >= 1 incoming and n >= 1 outgoing arcs joined at
// x = 0. All arcs must share one rho_max; mixed jam densities would need a
// normalization the transmission condition does not define, so they are
// rejected at construction.
class Network {
  public:
    explicit Network(std::vector<Arc> arcs);

    std::size_t arc_count() const { return arcs_.size(); }
    std::size_t incoming_count() const { return incoming_; }
    std::size_t outgoing_count() const { return arcs_.size() - incoming_; }

    // Arcs are stored incoming first, then outgoing, preserving input order
    // within each group.
    const Arc& arc(std::size_t h) const { return arcs_[h]; }
    bool is_incoming(std::size_t h) const { return h < incoming_; }

    double rho_max() const { return rho_max_; }
    // max over arcs of the flux Lipschitz bound; drives the CFL condition.
    double max_lipschitz() const { return max_lipschitz_; }

  private:
    std::vector<Arc> arcs_;
    std::size_t incoming_ = 0;
    double rho_max_ = 0.0;
    double max_lipschitz_ = 0.0;
};

}  // namespace netjunction
