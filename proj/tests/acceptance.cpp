// End-to-end validation: six numbered checks, one [PASS]/[FAIL] line per
// sub-check with measured and required values. Exit code is the number of
// failed sub-checks. `acceptance N` runs a single check, `--full` extends
// the error table of check 2 by the two finest resolutions.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "netjunction/analysis.hpp"
#include "netjunction/config.hpp"
#include "netjunction/driver.hpp"
#include "netjunction/exact.hpp"
#include "netjunction/junction.hpp"
#include "netjunction/mesh.hpp"
#include "netjunction/network.hpp"
#include "netjunction/presets.hpp"
#include "netjunction/scheme.hpp"
#include "support/front_ode.hpp"

using namespace netjunction;

namespace {

int g_failed = 0;
int g_passed = 0;

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

void check(bool ok, const std::string& what) {
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    ++(ok ? g_passed : g_failed);
}

Network merge_network() {
    std::vector<Arc> arcs;
    arcs.push_back({ArcDirection::incoming, 1.0, FluxModel::quadratic(1.0, 1.0)});
    arcs.push_back({ArcDirection::incoming, 1.0, FluxModel::quadratic(1.0, 1.0)});
    arcs.push_back({ArcDirection::outgoing, 1.0, FluxModel::quadratic(1.0, 1.0)});
    return Network(std::move(arcs));
}

ScenarioConfig load_preset(const char* name) {
    return load_config(preset_dir() / find_preset(name).file);
}

// 1: the congested trace emitted by the merge data (1, 3/4 | 0).
void check_trace() {
    Network net = merge_network();
    const double in_traces[] = {1.0, 0.75};
    const double out_traces[] = {0.0};
    JunctionResolution r = solve_junction(net, in_traces, out_traces);
    double target = (2.0 + std::sqrt(2.0)) / 4.0;
    check(std::abs(r.p - target) <= 1e-10,
          fmt("trace p = %.17g, |p - (2+sqrt(2))/4| = %.2e (tol 1e-10)", r.p,
              std::abs(r.p - target)));
    double total_in = r.incoming_fluxes[0] + r.incoming_fluxes[1];
    double total_out = r.outgoing_fluxes[0];
    bool balanced = std::abs(total_in - 0.25) <= 1e-10 && std::abs(total_out - 0.25) <= 1e-10;
    check(balanced, fmt("balanced flux: in %.17g, out %.17g, required 1/4 (tol 1e-10)", total_in,
                        total_out));
}

// 2: the merge benchmark error table at the fixed time step.
void check_error_table(bool full) {
    ScenarioConfig base = load_preset("convergence-table");
    std::vector<std::size_t> cells = {60, 120, 600, 1200};
    if (full) {
        cells.push_back(6000);
        cells.push_back(12000);
    }
    std::printf("running %zu resolutions at dt = %.4g, t_end = %.4g ...\n", cells.size(),
                *base.dt, base.t_end);
    std::vector<ErrorReport> reports = run_convergence(base, cells);

    std::vector<double> err;
    std::printf("  %6s  %13s  %7s  %13s  %13s\n", "cells", "err_network", "rate", "err_incoming",
                "err_outgoing");
    for (std::size_t i = 0; i < reports.size(); ++i) {
        err.push_back(reports[i].whole.value());
        std::string rate =
            i == 0 ? "-"
                   : fmt("%.4f", std::log(err[i - 1] / err[i]) /
                                     std::log(double(cells[i]) / double(cells[i - 1])));
        std::printf("  %6zu  %13.6e  %7s  %13.6e  %13.6e\n", cells[i], err[i], rate.c_str(),
                    reports[i].incoming.value(), reports[i].outgoing.value());
    }
    std::printf("  least-squares rate (network): %.4f\n", least_squares_rate(err, cells));

    const double want_err[4] = {6.5374e-2, 3.4281e-2, 7.6754e-3, 4.8890e-3};
    const double want_rate[3] = {0.9313, 0.9302, 0.8800};
    for (int i = 0; i < 4; ++i) {
        double rel = std::abs(err[i] - want_err[i]) / want_err[i];
        check(rel <= 0.05, fmt("%zu cells: network error %.4e vs expected %.4e (rel diff %.3f, "
                               "tol 0.05)",
                               cells[i], err[i], want_err[i], rel));
    }
    for (int i = 0; i < 3; ++i) {
        double rate = std::log(err[i] / err[i + 1]) /
                      std::log(double(cells[i + 1]) / double(cells[i]));
        check(std::abs(rate - want_rate[i]) <= 0.05,
              fmt("rate %zu -> %zu cells: %.4f vs expected %.4f (tol 0.05)", cells[i],
                  cells[i + 1], rate, want_rate[i]));
    }
}

// 3: drain times of the explicit merge solution, cross-checked against a
// direct numerical integration of the front trajectories.
void check_drain_times() {
    MergeSolution sol;
    const MergeLandmarks& mark = sol.landmarks();

    double worst1 = 0.0;
    for (int i = 1; i <= 400; ++i) {
        double t = mark.t_in1_empty + (sol.horizon() - mark.t_in1_empty) * i / 400.0;
        for (int k = 0; k <= 200; ++k)
            worst1 = std::max(worst1, std::abs(sol.density(t, -0.6 * k / 200.0, 1)));
    }
    check(worst1 == 0.0, fmt("second incoming arc is identically zero for t > %.17g "
                             "(largest of 80601 samples: %.3g)",
                             mark.t_in1_empty, worst1));

    double worst0 = 0.0;
    for (int i = 1; i <= 400; ++i) {
        double t = mark.t_in0_empty + (sol.horizon() - mark.t_in0_empty) * i / 400.0;
        for (int k = 0; k <= 200; ++k)
            worst0 = std::max(worst0, std::abs(sol.density(t, -0.6 * k / 200.0, 0)));
    }
    check(worst0 == 0.0, fmt("first incoming arc is identically zero for t > %.17g "
                             "(largest of 80601 samples: %.3g)",
                             mark.t_in0_empty, worst0));

    check(mark.t_in0_empty == 2.75,
          fmt("closed-form drain time of the first incoming arc: %.17g, required exactly 2.75",
              mark.t_in0_empty));

    front_ode::Chain chain = front_ode::track_merge_fronts(1e-5);
    check(std::abs(chain.t_in0_empty - 2.75) <= 1e-6,
          fmt("front-integration oracle: first arc drains at %.9f, |diff from 2.75| = %.2e "
              "(tol 1e-6)",
              chain.t_in0_empty, std::abs(chain.t_in0_empty - 2.75)));
    check(std::abs(chain.t_in1_empty - 1.5) <= 1e-6,
          fmt("front-integration oracle: second arc drains at %.9f, |diff from 1.5| = %.2e "
              "(tol 1e-6)",
              chain.t_in1_empty, std::abs(chain.t_in1_empty - 1.5)));
}

// 4: constant-data presets against the self-similar junction solutions.
void check_presets() {
    const char* names[6] = {"riemann-2-1-a", "riemann-2-1-b", "riemann-1-2-a",
                            "riemann-1-2-b", "riemann-2-2-a", "riemann-2-2-b"};
    struct Pair {
        double coarse, fine;
    };
    auto measure = [](const char* name) -> Pair {
        ScenarioConfig fine = load_preset(name);
        fine.output_times = {fine.t_end};
        ScenarioConfig coarse = fine;
        if (coarse.dx)
            coarse.dx = 1e-3;
        else
            coarse.cells_per_arc = (*coarse.cells_per_arc + 5) / 10;
        double ce = run_scenario(coarse).reports.back().whole.value();
        double fe = run_scenario(fine).reports.back().whole.value();
        return {ce, fe};
    };
    std::vector<std::future<Pair>> jobs;
    jobs.reserve(6);
    for (const char* name : names) jobs.emplace_back(std::async(std::launch::async, measure, name));
    for (int i = 0; i < 6; ++i) {
        Pair p = jobs[i].get();
        check(p.coarse <= 2e-2,
              fmt("%s: relative L1 error %.4e at the coarse resolution (tol 2e-2)", names[i],
                  p.coarse));
        check(p.fine < p.coarse, fmt("%s: tenfold refinement decreases the error: %.4e -> %.4e",
                                     names[i], p.coarse, p.fine));
    }
}

// 5: a 1-1 network run must equal the junction-free run shifted by the
// incoming arc length, cell by cell.
void check_transparency() {
    ScenarioConfig cfg = load_preset("single-arc-consistency");
    ShiftOutcome out = run_paired_shift(cfg);
    for (std::size_t i = 0; i < out.times.size(); ++i)
        check(out.max_diffs[i] <= 1e-12,
              fmt("t = %.17g: max cellwise |network - shifted line| = %.3e (tol 1e-12)",
                  out.times[i], out.max_diffs[i]));
}

FluxModel random_flux(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_real_distribution<double> speed(0.5, 2.0);
    switch (kind(rng)) {
        case 0:
            return FluxModel::quadratic(1.0, 1.0);
        case 1:
            return FluxModel::quadratic(speed(rng), 1.0);
        case 2:
            return FluxModel::tabulated({0.0, 0.1, 0.3, 0.55, 0.8, 1.0},
                                        {0.0, 0.08, 0.21, 0.18, 0.1, 0.0}, 0.3);
        default:
            return FluxModel::tabulated({0.0, 0.2, 0.4, 0.7, 1.0}, {0.0, 0.12, 0.2, 0.15, 0.0},
                                        0.4);
    }
}

Network random_star(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 3);
    int m = count(rng), n = count(rng);
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i) arcs.push_back({ArcDirection::incoming, 0.5, random_flux(rng)});
    for (int j = 0; j < n; ++j) arcs.push_back({ArcDirection::outgoing, 0.5, random_flux(rng)});
    return Network(std::move(arcs));
}

PiecewiseProfile random_pieces(std::mt19937& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> pieces(1, 3);
    std::vector<double> cuts = {lo, hi};
    int parts = pieces(rng);
    for (int i = 1; i < parts; ++i) cuts.push_back(lo + (hi - lo) * u(rng));
    std::sort(cuts.begin(), cuts.end());
    PiecewiseProfile out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i] < cuts[i + 1])) continue;
        double roll = u(rng);
        double value = roll < 0.1 ? 0.0 : (roll > 0.9 ? 1.0 : u(rng));
        out.push_back({cuts[i], cuts[i + 1], value});
    }
    return out;
}

std::vector<PiecewiseProfile> random_initial(std::mt19937& rng, const Network& net) {
    std::vector<PiecewiseProfile> out(net.arc_count());
    for (std::size_t h = 0; h < net.arc_count(); ++h) {
        double lo = net.is_incoming(h) ? -net.arc(h).length : 0.0;
        out[h] = random_pieces(rng, lo, lo + net.arc(h).length);
    }
    return out;
}

// A pair of initial conditions that agree except within `band` of the
// junction. The zero-gradient truncation at the outer ends is not
// contractive, so contraction is only claimed while the difference cone
// (one cell per step) stays clear of them.
void random_banded_pair(std::mt19937& rng, const Network& net, double band,
                        std::vector<PiecewiseProfile>& pa, std::vector<PiecewiseProfile>& pb) {
    pa.assign(net.arc_count(), {});
    pb.assign(net.arc_count(), {});
    for (std::size_t h = 0; h < net.arc_count(); ++h) {
        double len = net.arc(h).length;
        double band_lo = net.is_incoming(h) ? -band : 0.0;
        double band_hi = net.is_incoming(h) ? 0.0 : band;
        double outer_lo = net.is_incoming(h) ? -len : band;
        double outer_hi = net.is_incoming(h) ? -band : len;
        PiecewiseProfile shared = random_pieces(rng, outer_lo, outer_hi);
        pa[h] = shared;
        pb[h] = shared;
        for (const ConstantPiece& p : random_pieces(rng, band_lo, band_hi)) pa[h].push_back(p);
        for (const ConstantPiece& p : random_pieces(rng, band_lo, band_hi)) pb[h].push_back(p);
    }
}

double scan_godunov(const FluxModel& f, double a, double b) {
    double lo = std::min(a, b), hi = std::max(a, b);
    std::vector<double> cand;
    const int kSteps = 2000;
    for (int k = 0; k <= kSteps; ++k) cand.push_back(lo + (hi - lo) * k / kSteps);
    if (f.rho_crit() > lo && f.rho_crit() < hi) cand.push_back(f.rho_crit());
    if (!f.is_quadratic())
        for (double r : f.sample_rho())
            if (r > lo && r < hi) cand.push_back(r);
    double best = f.value(lo);
    for (double r : cand) {
        double v = f.value(r);
        best = a <= b ? std::min(best, v) : std::max(best, v);
    }
    return best;
}

// 6: structural properties of the scheme on randomized scenarios.
void check_properties() {
    std::mt19937 rng(20260813u);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    double low = 1.0, high = 0.0, worst_residual = 0.0;
    for (int s = 0; s < 50; ++s) {
        Network net = random_star(rng);
        Mesh mesh = Mesh::with_cells_per_arc(net, 20);
        double dt = (0.5 + 0.5 * u(rng)) * max_timestep(net, mesh.dx());
        Simulator sim(net, mesh, discretize_initial(net, mesh, random_initial(rng, net)), dt);
        for (int k = 0; k < 1000; ++k) {
            JunctionResolution r = sim.step();
            worst_residual = std::max(worst_residual, r.residual);
            for (const std::vector<double>& arc : sim.state().arcs)
                for (double v : arc) {
                    low = std::min(low, v);
                    high = std::max(high, v);
                }
        }
    }
    check(low >= 0.0 && high <= 1.0,
          fmt("invariant region: 50 random scenarios, 1000 steps each, all values in "
              "[%.3g, %.17g], required within [0, 1]",
              low, high));
    check(worst_residual <= 1e-12,
          fmt("junction conservation: worst per-step flux imbalance %.3e (tol 1e-12)",
              worst_residual));

    double worst_growth = -1.0;
    for (int s = 0; s < 100; ++s) {
        Network net = random_star(rng);
        Mesh mesh = Mesh::with_cells_per_arc(net, 120);
        double dt = (0.5 + 0.5 * u(rng)) * max_timestep(net, mesh.dx());
        std::vector<PiecewiseProfile> pa, pb;
        random_banded_pair(rng, net, 10 * mesh.dx(), pa, pb);
        Simulator sa(net, mesh, discretize_initial(net, mesh, pa), dt);
        Simulator sb(net, mesh, discretize_initial(net, mesh, pb), dt);
        double dist = l1_distance(sa.state(), sb.state(), mesh);
        for (int k = 0; k < 100; ++k) {
            sa.step();
            sb.step();
            double next = l1_distance(sa.state(), sb.state(), mesh);
            // Slack covers only summation roundoff in the two distances.
            worst_growth = std::max(worst_growth, next - dist * (1.0 + 1e-12) - 1e-16);
            dist = next;
        }
    }
    check(worst_growth <= 0.0,
          fmt("L1 contraction: 100 random pairs differing only near the junction, 100 steps "
              "each, worst distance growth beyond roundoff slack: %.3e (required <= 0)",
              worst_growth));

    const FluxModel models[3] = {
        FluxModel::quadratic(1.0, 1.0), FluxModel::quadratic(1.7, 1.0),
        FluxModel::tabulated({0.0, 0.1, 0.3, 0.55, 0.8, 1.0}, {0.0, 0.08, 0.21, 0.18, 0.1, 0.0},
                             0.3)};
    double worst_scan = 0.0;
    for (const FluxModel& f : models)
        for (int i = 0; i <= 40; ++i)
            for (int j = 0; j <= 40; ++j) {
                double a = i / 40.0, b = j / 40.0;
                worst_scan = std::max(worst_scan, std::abs(f.godunov(a, b) - scan_godunov(f, a, b)));
            }
    check(worst_scan <= 1e-8,
          fmt("demand/supply flux vs brute-force extremum scan: max |diff| = %.3e over 3 models "
              "x 41x41 states (tol 1e-8)",
              worst_scan));

    std::vector<Arc> arcs;
    arcs.push_back({ArcDirection::incoming, 0.5, FluxModel::quadratic(1.0, 1.0)});
    arcs.push_back({ArcDirection::outgoing, 0.5, FluxModel::quadratic(1.0, 1.0)});
    Network net(std::move(arcs));
    Mesh mesh = Mesh::with_cells_per_arc(net, 50);
    std::vector<PiecewiseProfile> shock = {{{-0.5, 0.0, 0.25}}, {{0.0, 0.5, 0.75}}};
    GridSolution start = discretize_initial(net, mesh, shock);
    Simulator sim(net, mesh, start, max_timestep(net, mesh.dx()));
    for (int k = 0; k < 10000; ++k) sim.step();
    bool identical = sim.state().arcs == start.arcs;
    double worst_drift = 0.0;
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t k = 0; k < 50; ++k)
            worst_drift =
                std::max(worst_drift, std::abs(sim.state().arcs[h][k] - start.arcs[h][k]));
    check(identical, fmt("stationary junction shock (0.25 | 0.75): %s after 10000 steps "
                         "(max drift %.3g)",
                         identical ? "bitwise unchanged" : "changed", worst_drift));
}

void run_check(int n, bool full) {
    static const char* titles[6] = {"junction trace for the merge data",
                                    "merge benchmark error table",
                                    "merge solution drain times",
                                    "constant-data presets vs exact junction solutions",
                                    "junction transparency on a 1-1 network",
                                    "scheme properties on random scenarios"};
    std::printf("\n-- check %d: %s --\n", n, titles[n - 1]);
    try {
        switch (n) {
            case 1: check_trace(); break;
            case 2: check_error_table(full); break;
            case 3: check_drain_times(); break;
            case 4: check_presets(); break;
            case 5: check_transparency(); break;
            case 6: check_properties(); break;
        }
    } catch (const std::exception& e) {
        check(false, fmt("unexpected exception: %s", e.what()));
    }
}

}  // namespace

int main(int argc, char** argv) {
    bool full = false;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--full") {
            full = true;
        } else {
            char* end = nullptr;
            only = static_cast<int>(std::strtol(arg.c_str(), &end, 10));
            if (!end || *end != '\0' || only < 1 || only > 6) {
                std::fprintf(stderr, "usage: acceptance [1-6] [--full]\n");
                return 64;
            }
        }
    }
    if (only != 0) {
        run_check(only, full);
    } else {
        for (int n = 1; n <= 6; ++n) run_check(n, full);
    }
    std::printf("\n%d passed, %d failed\n", g_passed, g_failed);
    return g_failed;
}
