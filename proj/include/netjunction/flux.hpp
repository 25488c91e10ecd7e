#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace netjunction {

// Bell-shaped flux on [0, rho_max]: zero at both ends, increasing up to the
// critical density, decreasing after it. Two kinds are supported: the closed
// form v_free * rho * (1 - rho/rho_max) and a monotone piecewise-linear
// interpolant of tabulated samples. Values are immutable after construction
// and safe to share across threads.
class FluxModel {
  public:
    static FluxModel quadratic(double v_free, double rho_max);

    // Samples must start at (0, 0), end at (rho_max, 0), contain rho_c, and be
    // unimodal around it. rho_c is taken from the caller, not inferred.
    static FluxModel tabulated(std::vector<double> rho, std::vector<double> flux,
                               double rho_c);

    bool is_quadratic() const { return kind_ == Kind::quadratic; }
    double rho_max() const { return rho_max_; }
    double rho_crit() const { return rho_crit_; }
    double max_flux() const { return max_flux_; }
    // Bound on |f'|; equals v_free for the quadratic kind, the steepest
    // segment slope for tabulated data.
    double lipschitz_bound() const { return lipschitz_; }
    double v_free() const { return v_free_; }

    // f(rho). Throws std::domain_error outside [0, rho_max].
    double value(double rho) const {
        check_range(rho);
        return value_unchecked(rho);
    }

    double demand(double rho) const {
        check_range(rho);
        return rho < rho_crit_ ? value_unchecked(rho) : max_flux_;
    }

    double supply(double rho) const {
        check_range(rho);
        return rho > rho_crit_ ? value_unchecked(rho) : max_flux_;
    }

    // Godunov two-point flux, computed as min(demand(a), supply(b)). For a
    // unimodal flux this equals the min/max of f over the interval between
    // a and b; a property test checks the equivalence against a brute scan.
    double godunov(double a, double b) const { return std::min(demand(a), supply(b)); }

    // Rankine-Hugoniot speed (f(b) - f(a)) / (b - a), extended continuously
    // by f'(a) on the diagonal so front ODEs stay well-posed.
    double shock_speed(double a, double b) const;

    // Derivative; closed form for quadratic, segment slope for tabulated
    // (central average at interior nodes).
    double derivative(double rho) const;

    // Inverses of f restricted to one side of rho_crit. phi must lie in
    // [0, max_flux]; quadratic kind only.
    double free_state_for_flux(double phi) const;
    double congested_state_for_flux(double phi) const;

    // Empty for the quadratic kind.
    const std::vector<double>& sample_rho() const { return tab_rho_; }
    const std::vector<double>& sample_flux() const { return tab_flux_; }

  private:
    enum class Kind { quadratic, tabulated };

    FluxModel() = default;
    void check_range(double rho) const;

    double value_unchecked(double rho) const {
        if (kind_ == Kind::quadratic) return v_free_ * rho * (1.0 - rho / rho_max_);
        auto it = std::upper_bound(tab_rho_.begin(), tab_rho_.end(), rho);
        if (it == tab_rho_.begin()) return tab_flux_.front();
        if (it == tab_rho_.end()) return tab_flux_.back();
        auto i = static_cast<std::size_t>(it - tab_rho_.begin());
        double w = (rho - tab_rho_[i - 1]) / (tab_rho_[i] - tab_rho_[i - 1]);
        return tab_flux_[i - 1] + w * (tab_flux_[i] - tab_flux_[i - 1]);
    }

    Kind kind_ = Kind::quadratic;
    double v_free_ = 1.0;
    double rho_max_ = 1.0;
    double rho_crit_ = 0.5;
    double max_flux_ = 0.25;
    double lipschitz_ = 1.0;
    std::vector<double> tab_rho_;
    std::vector<double> tab_flux_;
};

}  // namespace netjunction
