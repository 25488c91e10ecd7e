#include "netjunction/flux.hpp"

#include <cmath>
#include <sstream>

#include "netjunction/errors.hpp"

namespace netjunction {

FluxModel FluxModel::quadratic(double v_free, double rho_max) {
    if (!(v_free > 0.0) || !(rho_max > 0.0))
        throw config_error("quadratic flux needs v_free > 0 and rho_max > 0");
    FluxModel f;
    f.kind_ = Kind::quadratic;
    f.v_free_ = v_free;
    f.rho_max_ = rho_max;
    f.rho_crit_ = 0.5 * rho_max;
    f.max_flux_ = v_free * rho_max / 4.0;
    f.lipschitz_ = v_free;
    return f;
}

FluxModel FluxModel::tabulated(std::vector<double> rho, std::vector<double> flux,
                               double rho_c) {
    if (rho.size() != flux.size() || rho.size() < 3)
        throw config_error("tabulated flux needs matching grids with >= 3 samples");
    if (rho.front() != 0.0 || flux.front() != 0.0 || flux.back() != 0.0)
        throw config_error("tabulated flux must satisfy f(0) = 0 and f(rho_max) = 0");
    double rho_max = rho.back();
    if (!(rho_c > 0.0) || !(rho_c < rho_max))
        throw config_error("tabulated flux needs rho_c strictly inside (0, rho_max)");

    double lip = 0.0;
    double peak = 0.0;
    for (std::size_t i = 1; i < rho.size(); ++i) {
        double drho = rho[i] - rho[i - 1];
        if (!(drho > 0.0)) throw config_error("tabulated flux grid must be strictly increasing");
        double slope = (flux[i] - flux[i - 1]) / drho;
        bool rising = rho[i] <= rho_c;
        if (rising && slope < 0.0)
            throw config_error("tabulated flux must be nondecreasing below rho_c");
        if (!rising && rho[i - 1] >= rho_c && slope > 0.0)
            throw config_error("tabulated flux must be nonincreasing above rho_c");
        lip = std::max(lip, std::abs(slope));
        peak = std::max(peak, flux[i]);
    }

    FluxModel f;
    f.kind_ = Kind::tabulated;
    f.rho_max_ = rho_max;
    f.rho_crit_ = rho_c;
    f.lipschitz_ = lip;
    f.tab_rho_ = std::move(rho);
    f.tab_flux_ = std::move(flux);
    // The peak of the interpolant is attained at a node; rho_c need not be one.
    f.max_flux_ = std::max(peak, f.value_unchecked(rho_c));
    return f;
}

void FluxModel::check_range(double rho) const {
    if (rho >= 0.0 && rho <= rho_max_) return;
    std::ostringstream msg;
    msg << "density " << rho << " outside [0, " << rho_max_ << "]";
    throw std::domain_error(msg.str());
}

double FluxModel::shock_speed(double a, double b) const {
    check_range(a);
    check_range(b);
    if (a == b) return derivative(a);
    return (value_unchecked(b) - value_unchecked(a)) / (b - a);
}

double FluxModel::derivative(double rho) const {
    check_range(rho);
    if (kind_ == Kind::quadratic) return v_free_ * (1.0 - 2.0 * rho / rho_max_);
    double h = 0.5e-6 * rho_max_;
    double lo = std::max(0.0, rho - h);
    double hi = std::min(rho_max_, rho + h);
    return (value_unchecked(hi) - value_unchecked(lo)) / (hi - lo);
}

double FluxModel::free_state_for_flux(double phi) const {
    if (kind_ != Kind::quadratic)
        throw invariant_error("flux inversion is only available for the quadratic kind");
    if (!(phi >= 0.0) || phi > max_flux_ * (1.0 + 1e-12))
        throw std::domain_error("flux value outside [0, max_flux]");
    phi = std::min(phi, max_flux_);
    // Smaller root of v r (1 - r/rho_max) = phi.
    double disc = std::sqrt(std::max(0.0, 1.0 - phi / max_flux_));
    return rho_crit_ * (1.0 - disc);
}

double FluxModel::congested_state_for_flux(double phi) const {
    if (kind_ != Kind::quadratic)
        throw invariant_error("flux inversion is only available for the quadratic kind");
    if (!(phi >= 0.0) || phi > max_flux_ * (1.0 + 1e-12))
        throw std::domain_error("flux value outside [0, max_flux]");
    phi = std::min(phi, max_flux_);
    double disc = std::sqrt(std::max(0.0, 1.0 - phi / max_flux_));
    return rho_crit_ * (1.0 + disc);
}

}  // namespace netjunction
