#pragma once

#include <functional>
#include <vector>

#include "netjunction/junction.hpp"
#include "netjunction/mesh.hpp"
#include "netjunction/network.hpp"

namespace netjunction {

// Cell averages for every arc, stored in ascending x: on incoming arcs the
// junction-adjacent cell is arcs[h].back(), on outgoing ones arcs[h].front().
struct GridSolution {
    std::vector<std::vector<double>> arcs;
    double time = 0.0;
    long long step = 0;
};

// Constant value on [from, to); profiles are 0 outside their pieces.
struct ConstantPiece {
    double from;
    double to;
    double value;
};
using PiecewiseProfile = std::vector<ConstantPiece>;

// Cell averages of piecewise-constant data, exact at breakpoints: each cell
// integrates the overlap of every piece with the cell. Pieces must lie inside
// the arc domain and values inside [0, rho_max].
GridSolution discretize_initial(const Network& net, const Mesh& mesh,
                                const std::vector<PiecewiseProfile>& profiles);

// General profiles, averaged with 64-point composite midpoint quadrature.
GridSolution discretize_initial(const Network& net, const Mesh& mesh,
                                const std::vector<std::function<double(double)>>& profiles);

// Largest stable time step dx / (2 max_h L_h).
double max_timestep(const Network& net, double dx);

struct StepResult {
    GridSolution state;
    JunctionResolution junction;
};

// One conservative update: Godunov fluxes at interior interfaces, the
// transmission-condition fluxes at the junction, zero-gradient ghost cells at
// the outer ends. Throws invariant_error if dt violates the CFL bound.
StepResult advance(const GridSolution& state, const Network& net, const Mesh& mesh, double dt);

struct Snapshot {
    double requested_time = 0.0;
    GridSolution state;  // state.time is the actual step time used
};

struct JunctionRecord {
    long long step;  // the step this resolution advanced, i.e. from step to step+1
    double time;     // time before the update
    double p;
    double residual;
};

struct RunResult {
    std::vector<Snapshot> snapshots;
    std::vector<JunctionRecord> junction_records;
    // Set when any of the two outermost cells of some arc drifted more than
    // 1e-10 from its initial value: waves reached the truncated boundary and
    // the zero-gradient closure is active in the solution.
    bool boundary_touched = false;
};

// Marches with a fixed dt to max(t_end, last output time), snapshotting at the
// step nearest each requested time.
class Simulator {
  public:
    Simulator(const Network& net, Mesh mesh, GridSolution initial, double dt);

    const GridSolution& state() const { return state_; }
    double dt() const { return dt_; }

    JunctionResolution step();

    RunResult run(double t_end, const std::vector<double>& output_times);

  private:
    const Network& net_;
    Mesh mesh_;
    GridSolution state_;
    double dt_;
    std::vector<std::vector<double>> flux_scratch_;
    std::vector<std::vector<double>> next_scratch_;
    std::vector<double> boundary_baseline_;
    bool boundary_touched_ = false;

    friend StepResult advance(const GridSolution&, const Network&, const Mesh&, double);
    void advance_in_place(JunctionResolution& out);
    void capture_boundary_baseline();
    bool boundary_moved() const;
};

// Godunov marcher on one interval with zero-gradient ghosts at both ends and
// no junction anywhere; the reference for junction-transparency comparisons.
class LineMarcher {
  public:
    LineMarcher(FluxModel flux, double length, double dx, const PiecewiseProfile& initial,
                double dt);

    const std::vector<double>& cells() const { return cells_; }
    double dt() const { return dt_; }
    void step();

  private:
    FluxModel flux_;
    double dx_;
    double dt_;
    std::vector<double> cells_;
    std::vector<double> flux_scratch_;
};

}  // namespace netjunction
