#include <doctest.h>

#include <cmath>
#include <vector>

#include "netjunction/errors.hpp"
#include "netjunction/junction.hpp"
#include "netjunction/network.hpp"

using namespace netjunction;

namespace {

Network star(std::size_t m, std::size_t n) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < m; ++i)
        arcs.push_back({ArcDirection::incoming, 1.0, FluxModel::quadratic(1.0, 1.0)});
    for (std::size_t j = 0; j < n; ++j)
        arcs.push_back({ArcDirection::outgoing, 1.0, FluxModel::quadratic(1.0, 1.0)});
    return Network(std::move(arcs));
}

double total(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

}  // namespace

TEST_CASE("congested merge: jammed and dense arcs share the outgoing capacity") {
    Network net = star(2, 1);
    std::vector<double> in{1.0, 0.75}, out{0.0};
    JunctionResolution r = solve_junction(net, in, out);
    const double p1 = (2.0 + std::sqrt(2.0)) / 4.0;
    CHECK(std::abs(r.p - p1) <= 1e-10);
    CHECK(r.incoming_fluxes[0] == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(r.incoming_fluxes[1] == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(total(r.incoming_fluxes) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(total(r.outgoing_fluxes) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.residual <= 1e-12);
}

TEST_CASE("junction traces frozen for the six Riemann presets") {
    struct Case {
        std::size_t m, n;
        std::vector<double> in, out;
        double p, flux;
    };
    // p and the balanced total flux were computed by an independent bisection
    // before the scheme existed and are pinned here as regression values.
    const Case cases[] = {
        {2, 1, {0.25, 1.0 / 3.0}, {0.8}, 0.912310562561766, 0.16},
        {2, 1, {0.25, 2.0 / 3.0}, {0.2}, 0.8535533905932737, 0.25},
        {1, 2, {0.25}, {2.0 / 3.0, 0.8}, 0.10471529247895259, 0.1875},
        {1, 2, {0.75}, {1.0 / 3.0, 0.8}, 0.14644660940672624, 0.25},
        {2, 2, {0.25, 0.2}, {2.0 / 3.0, 5.0 / 6.0}, 0.2965574064044385, 0.3475},
        {2, 2, {0.75, 0.2}, {1.0 / 3.0, 1.0 / 6.0}, 0.2878679656440358, 0.41},
    };
    for (const Case& c : cases) {
        CAPTURE(c.p);
        Network net = star(c.m, c.n);
        JunctionResolution r = solve_junction(net, c.in, c.out);
        CHECK(std::abs(r.p - c.p) <= 1e-12);
        CHECK(std::abs(total(r.incoming_fluxes) - c.flux) <= 1e-12);
        CHECK(std::abs(total(r.outgoing_fluxes) - c.flux) <= 1e-12);
        CHECK(r.residual <= 1e-12);
    }
}

TEST_CASE("flux imbalance is nonincreasing in p with the right signs at the ends") {
    Network net = star(2, 2);
    std::vector<double> in{0.9, 0.15}, out{0.4, 0.7};
    double prev = junction_balance(net, in, out, 0.0);
    CHECK(prev >= 0.0);
    for (int k = 1; k <= 50; ++k) {
        double cur = junction_balance(net, in, out, k / 50.0);
        CHECK(cur <= prev + 1e-15);
        prev = cur;
    }
    CHECK(prev <= 0.0);
}

TEST_CASE("vacuum and jam short-circuits") {
    Network net = star(2, 1);
    std::vector<double> zeros{0.0, 0.0}, z1{0.0};
    JunctionResolution r0 = solve_junction(net, zeros, z1);
    CHECK(r0.p == 0.0);
    CHECK(r0.residual == 0.0);
    CHECK(total(r0.incoming_fluxes) == 0.0);

    std::vector<double> jam{1.0, 1.0}, j1{1.0};
    JunctionResolution r1 = solve_junction(net, jam, j1);
    CHECK(r1.p == 1.0);
    CHECK(total(r1.outgoing_fluxes) == 0.0);
}

TEST_CASE("interval of roots: any root yields the same flux vector") {
    // Traces (1/4 | 3/4) balance for every p in [1/4, 3/4]; the fluxes, not
    // p, are the meaningful output and must come out 3/16 on both sides.
    Network net = star(1, 1);
    std::vector<double> in{0.25}, out{0.75};
    JunctionResolution r = solve_junction(net, in, out);
    CHECK(junction_balance(net, in, out, r.p) == 0.0);
    CHECK(r.p == 0.5);  // first bisection midpoint is already an exact root
    CHECK(r.incoming_fluxes[0] == 0.1875);
    CHECK(r.outgoing_fluxes[0] == 0.1875);
    CHECK(r.residual == 0.0);
}

TEST_CASE("the balancing trace transmits the free flow of a 1-1 junction") {
    Network net = star(1, 1);
    std::vector<double> in{0.3}, out{0.3};
    JunctionResolution r = solve_junction(net, in, out);
    // Unique root at 0.3: bisection cannot land on it exactly, but the flux
    // on the demand-limited side is bitwise f(0.3).
    CHECK(std::abs(r.p - 0.3) <= 1e-12);
    CHECK(r.incoming_fluxes[0] == FluxModel::quadratic(1.0, 1.0).value(0.3));
    CHECK(r.residual <= 1e-12);
}

TEST_CASE("solver input validation") {
    Network net = star(2, 1);
    std::vector<double> in{0.5, 0.5}, out{0.5};
    CHECK_THROWS_AS(solve_junction(net, in, out, 0.0), config_error);
    std::vector<double> short_in{0.5};
    CHECK_THROWS_AS(solve_junction(net, short_in, out), config_error);
    std::vector<double> bad{0.5, 1.5};
    CHECK_THROWS_AS(solve_junction(net, bad, out), std::domain_error);
}
