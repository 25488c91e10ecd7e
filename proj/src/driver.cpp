#include "netjunction/driver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "netjunction/csv.hpp"
#include "netjunction/errors.hpp"
#include "netjunction/exact.hpp"

namespace netjunction {

namespace {

std::filesystem::path numbered(const std::filesystem::path& dir, const char* stem,
                               std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s_%03zu.csv", stem, i);
    return dir / buf;
}

void require_same_flux(const FluxModel& a, const FluxModel& b) {
    bool same = a.is_quadratic() == b.is_quadratic() && a.rho_max() == b.rho_max() &&
                (a.is_quadratic()
                     ? a.v_free() == b.v_free()
                     : a.sample_rho() == b.sample_rho() && a.sample_flux() == b.sample_flux() &&
                           a.rho_crit() == b.rho_crit());
    if (!same) throw config_error("paired-shift needs identical fluxes on both arcs");
}

}  // namespace

ExactDensity make_reference(const ScenarioConfig& cfg) {
    if (cfg.reference == ReferenceKind::merge) {
        auto sol = std::make_shared<MergeSolution>();
        return [sol](double t, double x, std::size_t arc) { return sol->density(t, x, arc); };
    }
    if (cfg.reference == ReferenceKind::junction_riemann) {
        auto sol =
            std::make_shared<JunctionRiemannSolution>(cfg.network, constant_states(cfg));
        return [sol](double t, double x, std::size_t arc) { return sol->density(t, x, arc); };
    }
    throw config_error("scenario declares no reference solution");
}

ScenarioOutcome run_scenario(const ScenarioConfig& cfg) {
    Mesh mesh = make_mesh(cfg);
    double dt = pick_dt(cfg, mesh);
    Simulator sim(cfg.network, mesh, discretize_initial(cfg.network, mesh, cfg.initial), dt);
    RunResult run = sim.run(cfg.t_end, cfg.output_times);
    std::vector<ErrorReport> reports;
    if (cfg.reference != ReferenceKind::none) {
        ExactDensity ref = make_reference(cfg);
        reports.reserve(run.snapshots.size());
        for (const Snapshot& s : run.snapshots)
            reports.push_back(rel_l1_error(s.state, cfg.network, mesh, ref));
    }
    return {std::move(mesh), dt, std::move(run), std::move(reports)};
}

void write_scenario_outputs(const ScenarioConfig& cfg, const ScenarioOutcome& outcome,
                            const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < outcome.run.snapshots.size(); ++i)
        write_snapshot_csv(numbered(dir, "snapshot", i), cfg.network, outcome.mesh,
                           outcome.run.snapshots[i].state);
    write_conservation_csv(dir / "conservation.csv", outcome.run.junction_records);
    if (cfg.reference != ReferenceKind::none) {
        ExactDensity ref = make_reference(cfg);
        for (std::size_t i = 0; i < outcome.run.snapshots.size(); ++i)
            write_exact_csv(numbered(dir, "exact", i), cfg.network, outcome.mesh, ref,
                            outcome.run.snapshots[i].state.time);
        write_error_csv(dir / "error.csv", outcome.reports);
    }
}

ShiftOutcome run_paired_shift(const ScenarioConfig& cfg) {
    const Network& net = cfg.network;
    if (net.incoming_count() != 1 || net.outgoing_count() != 1)
        throw config_error("paired-shift needs a 1-1 network");
    require_same_flux(net.arc(0).flux, net.arc(1).flux);

    Mesh mesh = make_mesh(cfg);
    double dt = pick_dt(cfg, mesh);
    std::vector<double> times =
        cfg.output_times.empty() ? std::vector<double>{cfg.t_end} : cfg.output_times;
    Simulator sim(net, mesh, discretize_initial(net, mesh, cfg.initial), dt);
    RunResult nrun = sim.run(cfg.t_end, times);

    // The twin interval: junction coordinate 0 maps to x = length of arc 0.
    double shift = net.arc(0).length;
    double total = net.arc(0).length + net.arc(1).length;
    PiecewiseProfile line_init;
    for (std::size_t h = 0; h < 2; ++h)
        for (ConstantPiece p : cfg.initial[h]) {
            p.from += shift;
            p.to += shift;
            line_init.push_back(p);
        }
    LineMarcher line(net.arc(0).flux, total, mesh.dx(), line_init, dt);

    ShiftOutcome out{std::move(mesh), dt, std::move(nrun), {}, {}, {}};
    long long done = 0;
    for (const Snapshot& snap : out.network_run.snapshots) {
        long long target = std::llround(snap.requested_time / dt);
        if (target < done)
            throw config_error("paired-shift output times must be nondecreasing");
        for (; done < target; ++done) line.step();
        out.line_states.push_back(line.cells());

        const std::vector<double>& in_cells = snap.state.arcs[0];
        const std::vector<double>& out_cells = snap.state.arcs[1];
        const std::vector<double>& lc = line.cells();
        double gap = 0.0;
        for (std::size_t k = 0; k < in_cells.size(); ++k)
            gap = std::max(gap, std::abs(in_cells[k] - lc[k]));
        for (std::size_t k = 0; k < out_cells.size(); ++k)
            gap = std::max(gap, std::abs(out_cells[k] - lc[in_cells.size() + k]));
        out.times.push_back(snap.state.time);
        out.max_diffs.push_back(gap);
    }
    return out;
}

void write_shift_outputs(const ScenarioConfig& cfg, const ShiftOutcome& outcome,
                         const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < outcome.network_run.snapshots.size(); ++i) {
        write_snapshot_csv(numbered(dir, "snapshot", i), cfg.network, outcome.mesh,
                           outcome.network_run.snapshots[i].state);
        write_line_csv(numbered(dir, "line", i), outcome.line_states[i], outcome.mesh.dx(),
                       outcome.times[i]);
    }
    write_conservation_csv(dir / "conservation.csv", outcome.network_run.junction_records);
    write_shift_report_csv(dir / "shift_report.csv", outcome.times, outcome.max_diffs);
}

unsigned worker_cap() {
    if (const char* env = std::getenv("NETJUNCTION_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<ErrorReport> run_convergence(const ScenarioConfig& base,
                                         const std::vector<std::size_t>& cells) {
    if (base.reference == ReferenceKind::none)
        throw config_error("convergence study needs a reference in the base scenario");
    if (cells.size() < 2) throw config_error("convergence study needs at least two resolutions");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] < 2) throw config_error("resolutions must be at least 2 cells per arc");
        if (i > 0 && cells[i] <= cells[i - 1])
            throw config_error("resolutions must be strictly increasing");
    }

    std::vector<ErrorReport> reports(cells.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size() || failed.load()) return;
            try {
                ScenarioConfig cfg = base;
                cfg.dx.reset();
                cfg.cells_per_arc = cells[i];
                cfg.output_times = {cfg.t_end};
                ScenarioOutcome o = run_scenario(cfg);
                reports[i] = o.reports.back();
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    unsigned workers =
        std::min<unsigned>(worker_cap(), static_cast<unsigned>(cells.size()));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return reports;
}

void write_convergence_outputs(const std::vector<ErrorReport>& reports,
                               const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_convergence_csv(dir / "table1.csv", reports);
}

}  // namespace netjunction
