#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "netjunction/scheme.hpp"

namespace netjunction {

// Reference density sampled as (t, x, arc) -> value.
using ExactDensity = std::function<double(double, double, std::size_t)>;

// Relative L1 errors of one snapshot against a reference, split by arc set.
// An entry is empty when its denominator vanishes (error undefined, not 0).
struct ErrorReport {
    std::optional<double> whole;
    std::optional<double> incoming;
    std::optional<double> outgoing;
    double time = 0.0;
    std::size_t cells_per_arc = 0;
};

// Samples the reference at the cell centers of the snapshot's own time and
// returns sum |exact - numeric| / sum |exact| over the whole network and over
// the incoming / outgoing subsets. The sums carry no dx factor; it cancels.
ErrorReport rel_l1_error(const GridSolution& numeric, const Network& net, const Mesh& mesh,
                         const ExactDensity& exact);

// Observed order between consecutive resolutions:
// log(E_coarse / E_fine) / log(N_fine / N_coarse), one entry per adjacent
// pair; empty where an error vanishes. cells must be strictly increasing.
std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors,
                                                     const std::vector<std::size_t>& cells);

// Slope q of the least-squares fit E ~ C * N^-q through all points; a
// smoothed companion to the pairwise rates above.
double least_squares_rate(const std::vector<double>& errors,
                          const std::vector<std::size_t>& cells);

// sum |a - b| * dx over all cells; operands must share mesh and topology.
double l1_distance(const GridSolution& a, const GridSolution& b, const Mesh& mesh);

// |sum of incoming fluxes - sum of outgoing fluxes| of one resolved step.
double conservation_residual(const JunctionResolution& r);

}  // namespace netjunction
