#include "netjunction/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netjunction/errors.hpp"

namespace netjunction {

namespace {

constexpr double kBoundaryDriftTol = 1e-10;

// Piece boundaries that are within rounding noise of a cell edge are moved
// onto that edge, so cells fully covered by a piece average to the piece
// value bitwise. Mirrored runs (shifted by a non-multiple of the arc length)
// then discretize to identical cell data instead of picking up one-ulp
// overlap fractions that monotone updates can amplify over many steps.
double snap_to_edge(double b, double dx) {
    double j = std::round(b / dx);
    double edge = j * dx;
    if (std::abs(b - edge) <= 1e-12 * std::max(1.0, std::abs(b))) return edge;
    return b;
}

void arc_domain(const Network& net, std::size_t h, double& lo, double& hi) {
    const double len = net.arc(h).length;
    if (net.is_incoming(h)) {
        lo = -len;
        hi = 0.0;
    } else {
        lo = 0.0;
        hi = len;
    }
}

void check_cfl(const Network& net, double dx, double dt) {
    double bound = max_timestep(net, dx);
    if (dt > bound * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "dt = " << dt << " violates the CFL bound dx/(2 max L) = " << bound;
        throw invariant_error(msg.str());
    }
    if (!(dt > 0.0)) throw invariant_error("dt must be positive");
}

// The shared single-step kernel: writes fluxes into flux[h] (cells+1 entries
// per arc) and the updated averages into next[h], then swaps next into cells.
JunctionResolution update_cells(const Network& net, const Mesh& mesh,
                                std::vector<std::vector<double>>& cells,
                                std::vector<std::vector<double>>& flux,
                                std::vector<std::vector<double>>& next, double dt) {
    const std::size_t m = net.incoming_count();
    const std::size_t n = net.outgoing_count();
    const double lambda = dt / mesh.dx();

    std::vector<double> traces_in(m);
    std::vector<double> traces_out(n);
    for (std::size_t i = 0; i < m; ++i) traces_in[i] = cells[i].back();
    for (std::size_t j = 0; j < n; ++j) traces_out[j] = cells[m + j].front();
    JunctionResolution res = solve_junction(net, traces_in, traces_out);

    for (std::size_t h = 0; h < net.arc_count(); ++h) {
        const FluxModel& f = net.arc(h).flux;
        const std::vector<double>& c = cells[h];
        std::vector<double>& F = flux[h];
        const std::size_t N = c.size();
        for (std::size_t k = 1; k < N; ++k) F[k] = f.godunov(c[k - 1], c[k]);
        if (net.is_incoming(h)) {
            F[0] = f.value(c[0]);  // zero-gradient ghost: G(c0, c0) = f(c0)
            F[N] = res.incoming_fluxes[h];
        } else {
            F[0] = res.outgoing_fluxes[h - m];
            F[N] = f.value(c[N - 1]);
        }
        std::vector<double>& out = next[h];
        for (std::size_t k = 0; k < N; ++k) out[k] = c[k] - lambda * (F[k + 1] - F[k]);
    }
    cells.swap(next);
    return res;
}

std::vector<std::vector<double>> make_scratch(const Mesh& mesh, std::size_t arcs, int extra) {
    std::vector<std::vector<double>> s(arcs);
    for (std::size_t h = 0; h < arcs; ++h)
        s[h].assign(mesh.cells(h) + static_cast<std::size_t>(extra), 0.0);
    return s;
}

}  // namespace

GridSolution discretize_initial(const Network& net, const Mesh& mesh,
                                const std::vector<PiecewiseProfile>& profiles) {
    if (profiles.size() != net.arc_count())
        throw config_error("initial data must list one profile per arc");
    GridSolution g;
    g.arcs.resize(net.arc_count());
    for (std::size_t h = 0; h < net.arc_count(); ++h) {
        double lo, hi;
        arc_domain(net, h, lo, hi);
        const double slack = 1e-9 * std::max(1.0, net.arc(h).length);
        for (const ConstantPiece& p : profiles[h]) {
            if (!(p.from < p.to)) {
                std::ostringstream msg;
                msg << "arc " << h << ": piece [" << p.from << ", " << p.to
                    << ") is empty or reversed";
                throw config_error(msg.str());
            }
            if (p.from < lo - slack || p.to > hi + slack) {
                std::ostringstream msg;
                msg << "arc " << h << ": piece [" << p.from << ", " << p.to
                    << ") falls outside the arc domain [" << lo << ", " << hi << "]";
                throw config_error(msg.str());
            }
            if (p.value < 0.0 || p.value > net.rho_max()) {
                std::ostringstream msg;
                msg << "arc " << h << ": initial value " << p.value << " outside [0, "
                    << net.rho_max() << "]";
                throw config_error(msg.str());
            }
        }
        PiecewiseProfile snapped = profiles[h];
        for (ConstantPiece& p : snapped) {
            p.from = snap_to_edge(p.from, mesh.dx());
            p.to = snap_to_edge(p.to, mesh.dx());
        }
        std::vector<double>& c = g.arcs[h];
        c.assign(mesh.cells(h), 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            double e0 = mesh.cell_left_edge(net, h, k);
            double e1 = mesh.cell_left_edge(net, h, k + 1);
            double acc = 0.0;
            for (const ConstantPiece& p : snapped) {
                double overlap = std::min(e1, p.to) - std::max(e0, p.from);
                if (overlap <= 0.0) continue;
                // Full coverage contributes the piece value exactly.
                acc += p.value * (overlap / (e1 - e0));
            }
            c[k] = acc;
        }
    }
    return g;
}

GridSolution discretize_initial(const Network& net, const Mesh& mesh,
                                const std::vector<std::function<double(double)>>& profiles) {
    if (profiles.size() != net.arc_count())
        throw config_error("initial data must list one profile per arc");
    constexpr int kQuadraturePoints = 64;
    GridSolution g;
    g.arcs.resize(net.arc_count());
    for (std::size_t h = 0; h < net.arc_count(); ++h) {
        std::vector<double>& c = g.arcs[h];
        c.assign(mesh.cells(h), 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            double e0 = mesh.cell_left_edge(net, h, k);
            double width = mesh.cell_left_edge(net, h, k + 1) - e0;
            double acc = 0.0;
            for (int q = 0; q < kQuadraturePoints; ++q) {
                double x = e0 + (q + 0.5) * width / kQuadraturePoints;
                double v = profiles[h](x);
                if (v < 0.0 || v > net.rho_max()) {
                    std::ostringstream msg;
                    msg << "arc " << h << ": initial profile value " << v << " at x = " << x
                        << " outside [0, " << net.rho_max() << "]";
                    throw config_error(msg.str());
                }
                acc += v;
            }
            c[k] = acc / kQuadraturePoints;
        }
    }
    return g;
}

double max_timestep(const Network& net, double dx) {
    return dx / (2.0 * net.max_lipschitz());
}

StepResult advance(const GridSolution& state, const Network& net, const Mesh& mesh, double dt) {
    check_cfl(net, mesh.dx(), dt);
    StepResult r;
    r.state = state;
    auto flux = make_scratch(mesh, net.arc_count(), 1);
    auto next = make_scratch(mesh, net.arc_count(), 0);
    r.junction = update_cells(net, mesh, r.state.arcs, flux, next, dt);
    r.state.step = state.step + 1;
    r.state.time = static_cast<double>(r.state.step) * dt;
    return r;
}

Simulator::Simulator(const Network& net, Mesh mesh, GridSolution initial, double dt)
    : net_(net), mesh_(std::move(mesh)), state_(std::move(initial)), dt_(dt) {
    check_cfl(net_, mesh_.dx(), dt_);
    if (state_.arcs.size() != net_.arc_count())
        throw config_error("initial state does not match the network topology");
    for (std::size_t h = 0; h < state_.arcs.size(); ++h) {
        if (state_.arcs[h].size() != mesh_.cells(h))
            throw config_error("initial state does not match the mesh");
        for (double v : state_.arcs[h])
            if (v < 0.0 || v > net_.rho_max())
                throw invariant_error("initial cell value outside [0, rho_max]");
    }
    flux_scratch_ = make_scratch(mesh_, net_.arc_count(), 1);
    next_scratch_ = make_scratch(mesh_, net_.arc_count(), 0);
    capture_boundary_baseline();
}

void Simulator::capture_boundary_baseline() {
    boundary_baseline_.clear();
    for (std::size_t h = 0; h < net_.arc_count(); ++h) {
        const std::vector<double>& c = state_.arcs[h];
        if (net_.is_incoming(h)) {
            boundary_baseline_.push_back(c[0]);
            boundary_baseline_.push_back(c[1]);
        } else {
            boundary_baseline_.push_back(c[c.size() - 1]);
            boundary_baseline_.push_back(c[c.size() - 2]);
        }
    }
}

bool Simulator::boundary_moved() const {
    std::size_t b = 0;
    for (std::size_t h = 0; h < net_.arc_count(); ++h) {
        const std::vector<double>& c = state_.arcs[h];
        double v0, v1;
        if (net_.is_incoming(h)) {
            v0 = c[0];
            v1 = c[1];
        } else {
            v0 = c[c.size() - 1];
            v1 = c[c.size() - 2];
        }
        if (std::abs(v0 - boundary_baseline_[b]) > kBoundaryDriftTol ||
            std::abs(v1 - boundary_baseline_[b + 1]) > kBoundaryDriftTol)
            return true;
        b += 2;
    }
    return false;
}

void Simulator::advance_in_place(JunctionResolution& out) {
    out = update_cells(net_, mesh_, state_.arcs, flux_scratch_, next_scratch_, dt_);
    state_.step += 1;
    state_.time = static_cast<double>(state_.step) * dt_;
    if (!boundary_touched_ && boundary_moved()) boundary_touched_ = true;
}

JunctionResolution Simulator::step() {
    JunctionResolution res;
    advance_in_place(res);
    return res;
}

RunResult Simulator::run(double t_end, const std::vector<double>& output_times) {
    if (state_.step != 0)
        throw invariant_error("run() expects a simulator at step 0; construct a fresh one");
    if (t_end < 0.0) throw config_error("t_end must be nonnegative");

    std::vector<long long> snapshot_steps;
    for (double t : output_times) {
        if (t < 0.0) throw config_error("output times must be nonnegative");
        snapshot_steps.push_back(std::llround(t / dt_));
    }
    long long final_step = std::llround(t_end / dt_);
    for (long long s : snapshot_steps) final_step = std::max(final_step, s);

    RunResult result;
    result.junction_records.reserve(static_cast<std::size_t>(final_step));
    auto emit_due = [&]() {
        for (std::size_t k = 0; k < snapshot_steps.size(); ++k)
            if (snapshot_steps[k] == state_.step)
                result.snapshots.push_back({output_times[k], state_});
    };
    if (output_times.empty() && final_step == 0) result.snapshots.push_back({t_end, state_});
    emit_due();

    while (state_.step < final_step) {
        long long s = state_.step;
        double t = state_.time;
        JunctionResolution res;
        advance_in_place(res);
        result.junction_records.push_back({s, t, res.p, res.residual});
        emit_due();
    }
    if (output_times.empty() && final_step > 0) result.snapshots.push_back({t_end, state_});
    result.boundary_touched = boundary_touched_;
    return result;
}

LineMarcher::LineMarcher(FluxModel flux, double length, double dx,
                         const PiecewiseProfile& initial, double dt)
    : flux_(std::move(flux)), dx_(dx), dt_(dt) {
    if (!(dx > 0.0) || !(length > 0.0)) throw config_error("line marcher needs dx, length > 0");
    auto n = static_cast<long long>(std::llround(length / dx));
    if (n < 2 || std::abs(static_cast<double>(n) * dx - length) > 1e-12 * length)
        throw config_error("line length is not a multiple (>= 2) of dx");
    if (dt > dx / (2.0 * flux_.lipschitz_bound()) * (1.0 + 1e-12))
        throw invariant_error("line marcher dt violates the CFL bound");

    PiecewiseProfile snapped = initial;
    for (ConstantPiece& p : snapped) {
        if (p.value < 0.0 || p.value > flux_.rho_max())
            throw config_error("line initial value outside [0, rho_max]");
        p.from = snap_to_edge(p.from, dx_);
        p.to = snap_to_edge(p.to, dx_);
    }
    cells_.assign(static_cast<std::size_t>(n), 0.0);
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        double e0 = static_cast<double>(k) * dx_;
        double e1 = static_cast<double>(k + 1) * dx_;
        double acc = 0.0;
        for (const ConstantPiece& p : snapped) {
            double overlap = std::min(e1, p.to) - std::max(e0, p.from);
            if (overlap > 0.0) acc += p.value * (overlap / (e1 - e0));
        }
        cells_[k] = acc;
    }
    flux_scratch_.assign(cells_.size() + 1, 0.0);
}

void LineMarcher::step() {
    const std::size_t N = cells_.size();
    const double lambda = dt_ / dx_;
    flux_scratch_[0] = flux_.value(cells_[0]);
    for (std::size_t k = 1; k < N; ++k)
        flux_scratch_[k] = flux_.godunov(cells_[k - 1], cells_[k]);
    flux_scratch_[N] = flux_.value(cells_[N - 1]);
    for (std::size_t k = 0; k < N; ++k)
        cells_[k] -= lambda * (flux_scratch_[k + 1] - flux_scratch_[k]);
}

}  // namespace netjunction
