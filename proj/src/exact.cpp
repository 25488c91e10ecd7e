#include "netjunction/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "netjunction/errors.hpp"

namespace netjunction {

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);
}  // namespace

double riemann_eval(const FluxModel& f, double left, double right, double xi) {
    if (!f.is_quadratic())
        throw config_error("Riemann evaluation is implemented for the quadratic flux only");
    if (left < 0.0 || left > f.rho_max() || right < 0.0 || right > f.rho_max())
        throw std::domain_error("Riemann states must lie in [0, rho_max]");
    if (left == right) return left;
    if (left < right) {
        double sigma = f.shock_speed(left, right);
        return xi < sigma ? left : right;
    }
    double head = f.derivative(left);
    double tail = f.derivative(right);
    if (xi <= head) return left;
    if (xi >= tail) return right;
    // Fan value solves f'(rho) = xi.
    return 0.5 * f.rho_max() * (1.0 - xi / f.v_free());
}

JunctionRiemannSolution::JunctionRiemannSolution(const Network& net, std::vector<double> states)
    : states_(std::move(states)), incoming_(net.incoming_count()) {
    if (states_.size() != net.arc_count())
        throw config_error("junction Riemann data needs one constant state per arc");
    fluxes_.reserve(net.arc_count());
    for (std::size_t h = 0; h < net.arc_count(); ++h) {
        if (!net.arc(h).flux.is_quadratic())
            throw config_error("self-similar junction solutions need quadratic fluxes");
        fluxes_.push_back(net.arc(h).flux);
    }
    std::vector<double> in(states_.begin(), states_.begin() + static_cast<long>(incoming_));
    std::vector<double> out(states_.begin() + static_cast<long>(incoming_), states_.end());
    resolution_ = solve_junction(net, in, out);
}

double JunctionRiemannSolution::density(double t, double x, std::size_t arc) const {
    if (arc >= states_.size()) throw std::domain_error("arc index out of range");
    bool inbound = arc < incoming_;
    if (t < 0.0) throw std::domain_error("t must be nonnegative");
    if (inbound ? x > 0.0 : x < 0.0)
        throw std::domain_error("x is not on the arc's half-line");
    if (t == 0.0) return states_[arc];
    double xi = x / t;
    return inbound ? riemann_eval(fluxes_[arc], states_[arc], resolution_.p, xi)
                   : riemann_eval(fluxes_[arc], resolution_.p, states_[arc], xi);
}

MergeSolution::MergeSolution() : flux_(FluxModel::quadratic(1.0, 1.0)) {
    mark_.plateau = (2.0 + kSqrt2) / 4.0;
    mark_.release_trace = 0.5;
    mark_.t_back_absorbed = 0.5;
    mark_.t_collision = (2.0 - kSqrt2) / 2.0;
    mark_.x_collision = -kSqrt2 / 8.0;
    mark_.t_fan_consumed = 12.0 - 8.0 * kSqrt2;
    mark_.x_fan_consumed = 8.0 - 6.0 * kSqrt2;
    mark_.t_in1_empty = 1.5;
    mark_.t_release_catch = 9.0 - 5.0 * kSqrt2;
    mark_.x_release_catch = 5.0 - 15.0 * kSqrt2 / 4.0;
    mark_.t_in0_empty = 2.75;

    const double c = kSqrt2 / 2.0;                // fan edge speed |f'(plateau)|
    const double sE = (2.0 - kSqrt2) / 4.0;       // speed of a (0 | plateau) shock
    const double tC = mark_.t_collision;
    const double xC = mark_.x_collision;
    const double tE = mark_.t_fan_consumed;
    const double xE = mark_.x_fan_consumed;
    const double tG = mark_.t_release_catch;
    const double tH = mark_.t_in0_empty;
    auto lin = [](double x0, double t0, double v) {
        return [=](double t) { return x0 + v * (t - t0); };
    };
    auto vconst = [](double v) {
        return [v](double) { return v; };
    };
    fronts_ = {
        {"in0-back-shock", 0, FrontKind::shock, 0.0, 0.5, lin(-0.5, 0.0, 0.0), vconst(0.0)},
        {"in0-absorbing-shock", 0, FrontKind::shock, 0.5, tE,
         [](double t) { return t - std::sqrt(2.0 * t); },
         [](double t) { return 1.0 - 1.0 / std::sqrt(2.0 * t); }},
        {"in0-plateau-shock", 0, FrontKind::shock, tE, tG, lin(xE, tE, sE), vconst(sE)},
        {"in0-release-shock", 0, FrontKind::shock, tG, tH,
         [](double t) { return (t - 1.5) - 0.5 * kSqrt5 * std::sqrt(t - 1.5); },
         [](double t) { return 1.0 - 0.25 * kSqrt5 / std::sqrt(t - 1.5); }},
        {"in0-fan-head", 0, FrontKind::fan_edge, 0.0, 0.5, [](double t) { return -t; },
         vconst(-1.0)},
        {"in0-fan-tail", 0, FrontKind::fan_edge, 0.0, tE, [c](double t) { return -c * t; },
         vconst(-c)},
        {"in0-release-fan-head", 0, FrontKind::fan_edge, 1.5, tG,
         [c](double t) { return -c * (t - 1.5); }, vconst(-c)},
        {"in1-back-shock", 1, FrontKind::shock, 0.0, tC, lin(-0.25, 0.0, 0.25), vconst(0.25)},
        {"in1-junction-shock", 1, FrontKind::shock, 0.0, tC,
         lin(0.0, 0.0, -0.25 * (kSqrt2 + 1.0)), vconst(-0.25 * (kSqrt2 + 1.0))},
        {"in1-drain-shock", 1, FrontKind::shock, tC, 1.5, lin(xC, tC, sE), vconst(sE)},
        {"out-fan-head", 2, FrontKind::fan_edge, 0.0, 3.0, [](double t) { return t; },
         vconst(1.0)},
        {"out-release-shock", 2, FrontKind::shock, tH, 3.0,
         [tH](double t) { return t - std::sqrt(tH * t); },
         [tH](double t) { return 1.0 - 0.5 * std::sqrt(tH / t); }},
    };
}

double MergeSolution::density(double t, double x, std::size_t arc) const {
    if (arc > 2) throw std::domain_error("merge benchmark arcs are 0, 1, 2");
    if (t < 0.0 || t > horizon())
        throw std::domain_error("t outside the validity horizon [0, 3]");
    if (arc < 2 ? x > 0.0 : x < 0.0)
        throw std::domain_error("x is not on the arc's half-line");
    if (arc == 0) return in0(t, x);
    if (arc == 1) return in1(t, x);
    return out(t, x);
}

// Values at a jump are right limits throughout.

double MergeSolution::in0(double t, double x) const {
    const double c = kSqrt2 / 2.0;
    const double sE = (2.0 - kSqrt2) / 4.0;
    if (t == 0.0) return x >= -0.5 ? 1.0 : 0.0;
    if (t <= mark_.t_back_absorbed) {
        if (x < -0.5) return 0.0;
        if (x < -t) return 1.0;
        if (x <= -c * t) return 0.5 * (1.0 - x / t);
        return mark_.plateau;
    }
    if (t <= mark_.t_fan_consumed) {
        if (x < t - std::sqrt(2.0 * t)) return 0.0;
        if (x <= -c * t) return 0.5 * (1.0 - x / t);
        return mark_.plateau;
    }
    if (t <= mark_.t_in1_empty) {
        double xs = mark_.x_fan_consumed + sE * (t - mark_.t_fan_consumed);
        return x < xs ? 0.0 : mark_.plateau;
    }
    if (t <= mark_.t_release_catch) {
        double xs = mark_.x_fan_consumed + sE * (t - mark_.t_fan_consumed);
        if (x < xs) return 0.0;
        double s = t - mark_.t_in1_empty;
        if (x < -c * s) return mark_.plateau;
        return 0.5 * (1.0 - x / s);
    }
    if (t <= mark_.t_in0_empty) {
        double s = t - mark_.t_in1_empty;
        double xs = s - 0.5 * kSqrt5 * std::sqrt(s);
        if (x < xs) return 0.0;
        return 0.5 * (1.0 - x / s);
    }
    return 0.0;
}

double MergeSolution::in1(double t, double x) const {
    const double sE = (2.0 - kSqrt2) / 4.0;
    if (t == 0.0) return x >= -0.25 ? 0.75 : 0.0;
    if (t <= mark_.t_collision) {
        if (x < -0.25 + 0.25 * t) return 0.0;
        if (x < -0.25 * (kSqrt2 + 1.0) * t) return 0.75;
        return mark_.plateau;
    }
    if (t <= mark_.t_in1_empty) {
        double xs = mark_.x_collision + sE * (t - mark_.t_collision);
        return x < xs ? 0.0 : mark_.plateau;
    }
    return 0.0;
}

double MergeSolution::out(double t, double x) const {
    if (t == 0.0) return 0.0;
    if (t > mark_.t_in0_empty) {
        double xs = t - std::sqrt(mark_.t_in0_empty * t);
        if (x < xs) return 0.0;
    }
    return x < t ? 0.5 * (1.0 - x / t) : 0.0;
}

}  // namespace netjunction
