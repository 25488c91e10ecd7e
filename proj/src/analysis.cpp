#include "netjunction/analysis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netjunction {

ErrorReport rel_l1_error(const GridSolution& numeric, const Network& net, const Mesh& mesh,
                         const ExactDensity& exact) {
    if (numeric.arcs.size() != net.arc_count())
        throw std::invalid_argument("snapshot does not match the network");
    double num_in = 0.0, den_in = 0.0, num_out = 0.0, den_out = 0.0;
    for (std::size_t h = 0; h < net.arc_count(); ++h) {
        const std::vector<double>& c = numeric.arcs[h];
        if (c.size() != mesh.cells(h))
            throw std::invalid_argument("snapshot does not match the mesh");
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) {
            double v = exact(numeric.time, mesh.cell_center(net, h, k), h);
            num += std::abs(v - c[k]);
            den += std::abs(v);
        }
        (net.is_incoming(h) ? num_in : num_out) += num;
        (net.is_incoming(h) ? den_in : den_out) += den;
    }
    ErrorReport rep;
    rep.time = numeric.time;
    rep.cells_per_arc = mesh.cells(0);
    if (den_in > 0.0) rep.incoming = num_in / den_in;
    if (den_out > 0.0) rep.outgoing = num_out / den_out;
    if (den_in + den_out > 0.0) rep.whole = (num_in + num_out) / (den_in + den_out);
    return rep;
}

std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors,
                                                     const std::vector<std::size_t>& cells) {
    if (errors.size() != cells.size() || errors.size() < 2)
        throw std::invalid_argument("need matching errors and cells, at least two rows");
    for (std::size_t k = 1; k < cells.size(); ++k)
        if (cells[k] <= cells[k - 1])
            throw std::invalid_argument("cells must be strictly increasing");
    std::vector<std::optional<double>> rates;
    rates.reserve(errors.size() - 1);
    for (std::size_t k = 1; k < errors.size(); ++k) {
        if (errors[k - 1] <= 0.0 || errors[k] <= 0.0) {
            rates.emplace_back();
            continue;
        }
        rates.push_back(std::log(errors[k - 1] / errors[k]) /
                        std::log(static_cast<double>(cells[k]) /
                                 static_cast<double>(cells[k - 1])));
    }
    return rates;
}

double least_squares_rate(const std::vector<double>& errors,
                          const std::vector<std::size_t>& cells) {
    if (errors.size() != cells.size() || errors.size() < 2)
        throw std::invalid_argument("need matching errors and cells, at least two rows");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    auto n = static_cast<double>(errors.size());
    for (std::size_t k = 0; k < errors.size(); ++k) {
        if (errors[k] <= 0.0) throw std::invalid_argument("errors must be positive");
        double x = std::log(static_cast<double>(cells[k]));
        double y = std::log(errors[k]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double l1_distance(const GridSolution& a, const GridSolution& b, const Mesh& mesh) {
    if (a.arcs.size() != b.arcs.size())
        throw std::invalid_argument("operands have different topologies");
    double total = 0.0;
    for (std::size_t h = 0; h < a.arcs.size(); ++h) {
        if (a.arcs[h].size() != b.arcs[h].size() || a.arcs[h].size() != mesh.cells(h))
            throw std::invalid_argument("operands have different meshes");
        for (std::size_t k = 0; k < a.arcs[h].size(); ++k)
            total += std::abs(a.arcs[h][k] - b.arcs[h][k]);
    }
    return total * mesh.dx();
}

double conservation_residual(const JunctionResolution& r) {
    double in = std::accumulate(r.incoming_fluxes.begin(), r.incoming_fluxes.end(), 0.0);
    double out = std::accumulate(r.outgoing_fluxes.begin(), r.outgoing_fluxes.end(), 0.0);
    return std::abs(in - out);
}

}  // namespace netjunction
