#pragma once

#include <span>
#include <vector>

#include "netjunction/network.hpp"

namespace netjunction {

// Result of one transmission-condition solve. The per-arc flux vector is the
// contract: when the balance equation has an interval of roots, every root
// yields the same fluxes (Godunov is flat there), while p itself is just the
// point bisection landed on.
struct JunctionResolution {
    double p = 0.0;
    std::vector<double> incoming_fluxes;
    std::vector<double> outgoing_fluxes;
    double residual = 0.0;  // |sum(incoming) - sum(outgoing)| at p
    int iterations = 0;
};

// Flux imbalance Phi(p) = sum_i G_i(a_i, p) - sum_j G_j(p, b_j) for boundary
// traces a (incoming side) and b (outgoing side). Nonincreasing in p with
// Phi(0) >= 0 >= Phi(rho_max).
double junction_balance(const Network& net, std::span<const double> traces_in,
                        std::span<const double> traces_out, double p);

// Solves Phi(p) = 0 by bisection on [0, rho_max], running the bracket down to
// an adjacent floating-point pair (or an exact zero) and returning whichever
// endpoint has the smaller |Phi|. tol is a guarantee checked on the result,
// not an early-out: the residual must come out <= tol or the solve throws.
JunctionResolution solve_junction(const Network& net, std::span<const double> traces_in,
                                  std::span<const double> traces_out, double tol = 1e-12);

}  // namespace netjunction
