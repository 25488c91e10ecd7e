#include "netjunction/junction.hpp"

#include <cmath>
#include <sstream>

#include "netjunction/errors.hpp"

namespace netjunction {

namespace {

void check_traces(const Network& net, std::span<const double> in, std::span<const double> out) {
    if (in.size() != net.incoming_count() || out.size() != net.outgoing_count()) {
        std::ostringstream msg;
        msg << "trace vectors (" << in.size() << " in, " << out.size()
            << " out) do not match the network topology (" << net.incoming_count() << " in, "
            << net.outgoing_count() << " out)";
        throw config_error(msg.str());
    }
}

JunctionResolution resolution_at(const Network& net, std::span<const double> in,
                                 std::span<const double> out, double p, int iterations) {
    JunctionResolution r;
    r.p = p;
    r.iterations = iterations;
    r.incoming_fluxes.reserve(in.size());
    r.outgoing_fluxes.reserve(out.size());
    double total_in = 0.0;
    double total_out = 0.0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        double g = net.arc(i).flux.godunov(in[i], p);
        r.incoming_fluxes.push_back(g);
        total_in += g;
    }
    for (std::size_t j = 0; j < out.size(); ++j) {
        double g = net.arc(net.incoming_count() + j).flux.godunov(p, out[j]);
        r.outgoing_fluxes.push_back(g);
        total_out += g;
    }
    r.residual = std::abs(total_in - total_out);
    return r;
}

}  // namespace

double junction_balance(const Network& net, std::span<const double> traces_in,
                        std::span<const double> traces_out, double p) {
    check_traces(net, traces_in, traces_out);
    double sum = 0.0;
    for (std::size_t i = 0; i < traces_in.size(); ++i)
        sum += net.arc(i).flux.godunov(traces_in[i], p);
    for (std::size_t j = 0; j < traces_out.size(); ++j)
        sum -= net.arc(net.incoming_count() + j).flux.godunov(p, traces_out[j]);
    return sum;
}

JunctionResolution solve_junction(const Network& net, std::span<const double> traces_in,
                                  std::span<const double> traces_out, double tol) {
    check_traces(net, traces_in, traces_out);
    if (!(tol > 0.0)) throw config_error("junction solve needs tol > 0");
    const double rho_max = net.rho_max();

    auto phi = [&](double p) {
        double sum = 0.0;
        for (std::size_t i = 0; i < traces_in.size(); ++i)
            sum += net.arc(i).flux.godunov(traces_in[i], p);
        for (std::size_t j = 0; j < traces_out.size(); ++j)
            sum -= net.arc(net.incoming_count() + j).flux.godunov(p, traces_out[j]);
        return sum;
    };

    // Degenerate states first: an empty or fully jammed junction carries no
    // flux, and bisection noise should not manufacture any.
    bool all_zero = true;
    bool all_jam = true;
    for (double a : traces_in) {
        all_zero = all_zero && a == 0.0;
        all_jam = all_jam && a == rho_max;
    }
    for (double b : traces_out) {
        all_zero = all_zero && b == 0.0;
        all_jam = all_jam && b == rho_max;
    }
    if (all_zero) return resolution_at(net, traces_in, traces_out, 0.0, 0);
    if (all_jam) return resolution_at(net, traces_in, traces_out, rho_max, 0);

    double lo = 0.0;
    double hi = rho_max;
    double phi_lo = phi(lo);
    double phi_hi = phi(hi);
    if (phi_lo < -tol || phi_hi > tol) {
        std::ostringstream msg;
        msg << "flux balance has no bracket on [0, rho_max]: Phi(0) = " << phi_lo
            << ", Phi(rho_max) = " << phi_hi;
        throw invariant_error(msg.str());
    }
    if (phi_lo == 0.0 && phi_hi == 0.0)
        return resolution_at(net, traces_in, traces_out, 0.0, 0);

    int iterations = 0;
    const int max_iterations = 200;
    while (iterations < max_iterations) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // bracket is one ulp wide
        ++iterations;
        double phi_mid = phi(mid);
        if (phi_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if (phi_mid > 0.0)
            lo = mid;
        else
            hi = mid;
    }

    double p = std::abs(phi(lo)) <= std::abs(phi(hi)) ? lo : hi;
    JunctionResolution r = resolution_at(net, traces_in, traces_out, p, iterations);
    if (r.residual > tol) {
        std::ostringstream msg;
        msg << "junction residual " << r.residual << " exceeds tol " << tol << " after "
            << iterations << " bisection steps";
        throw invariant_error(msg.str());
    }
    return r;
}

}  // namespace netjunction
