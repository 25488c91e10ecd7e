#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "netjunction/junction.hpp"
#include "netjunction/network.hpp"

namespace netjunction {

// Entropy solution of the Riemann problem (left | right) for a strictly
// concave quadratic flux, evaluated at the self-similar coordinate xi = x/t:
// a single shock for left < right, a rarefaction fan for left > right.
// Quadratic kind only. At a discontinuity the right-limit value is returned.
double riemann_eval(const FluxModel& f, double left, double right, double xi);

// Self-similar network solution emitted by the junction from constant
// initial data: with p the balancing trace, incoming arc i carries the
// restriction to x < 0 of the Riemann solution (state_i | p), outgoing arc j
// the restriction to x > 0 of (p | state_j). The junction fluxes of this
// construction coincide with the transmission-condition fluxes.
class JunctionRiemannSolution {
  public:
    JunctionRiemannSolution(const Network& net, std::vector<double> states);

    double p_star() const { return resolution_.p; }
    const JunctionResolution& resolution() const { return resolution_; }

    // Density at (t, x) on the given arc; x must lie on the arc's half-line
    // (x <= 0 incoming, x >= 0 outgoing). t = 0 returns the initial state.
    double density(double t, double x, std::size_t arc) const;

  private:
    std::vector<FluxModel> fluxes_;
    std::vector<double> states_;
    std::size_t incoming_ = 0;
    JunctionResolution resolution_;
};

enum class FrontKind { shock, fan_edge };

// One wave trajectory of an explicit solution, valid on [t_begin, t_end].
struct Front {
    std::string label;
    std::size_t arc;
    FrontKind kind;
    double t_begin;
    double t_end;
    std::function<double(double)> position;
    std::function<double(double)> speed;
};

// Landmark values of the merge benchmark below, all in closed form.
struct MergeLandmarks {
    double plateau;          // congested junction trace (2 + sqrt 2)/4
    double release_trace;    // junction trace after arc 1 drains: 1/2
    double t_back_absorbed;  // 1/2: arc 0's fan overtakes its standing back shock
    double t_collision;      // (2 - sqrt 2)/2: the two shocks on arc 1 merge
    double x_collision;      // -sqrt(2)/8
    double t_fan_consumed;   // 12 - 8 sqrt 2: arc 0's fan fully absorbed
    double x_fan_consumed;   // 8 - 6 sqrt 2
    double t_in1_empty;      // 3/2: arc 1 drains, junction switches regime
    double t_release_catch;  // 9 - 5 sqrt 2: release fan reaches arc 0's free shock
    double x_release_catch;  // 5 - 15 sqrt(2)/4
    double t_in0_empty;      // 11/4: arc 0 drains, nothing enters arc 2 afterwards
};

// Explicit solution of the merge benchmark: incoming arcs 0 and 1, outgoing
// arc 2, quadratic(1, 1) flux everywhere, initial density 1 on [-1/2, 0] of
// arc 0, 3/4 on [-1/4, 0] of arc 1, empty outgoing arc. Every wave up to the
// validity horizon t = 3 is resolved in closed form; fronts() lists them for
// cross-checks against the jump conditions.
class MergeSolution {
  public:
    MergeSolution();

    // Density at (t, x); t in [0, horizon], x on the arc's half-line.
    // Throws std::domain_error outside the validity region.
    double density(double t, double x, std::size_t arc) const;

    double horizon() const { return 3.0; }
    const MergeLandmarks& landmarks() const { return mark_; }
    const std::vector<Front>& fronts() const { return fronts_; }
    const FluxModel& flux() const { return flux_; }

  private:
    double in0(double t, double x) const;
    double in1(double t, double x) const;
    double out(double t, double x) const;

    FluxModel flux_;
    MergeLandmarks mark_;
    std::vector<Front> fronts_;
};

}  // namespace netjunction
