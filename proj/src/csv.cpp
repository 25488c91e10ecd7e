#include "netjunction/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace netjunction {

namespace {

std::ofstream open_or_throw(const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    return out;
}

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string opt17(const std::optional<double>& v) { return v ? g17(*v) : std::string(); }

void close_or_throw(std::ofstream& out, const std::filesystem::path& file) {
    out.flush();
    if (!out) throw std::runtime_error("failed while writing " + file.string());
}

}  // namespace

void write_snapshot_csv(const std::filesystem::path& file, const Network& net, const Mesh& mesh,
                        const GridSolution& state) {
    std::ofstream out = open_or_throw(file);
    out << "arc,t,x,rho\n";
    for (std::size_t h = 0; h < net.arc_count(); ++h)
        for (std::size_t k = 0; k < mesh.cells(h); ++k)
            out << h << ',' << g17(state.time) << ',' << g17(mesh.cell_center(net, h, k))
                << ',' << g17(state.arcs[h][k]) << '\n';
    close_or_throw(out, file);
}

void write_exact_csv(const std::filesystem::path& file, const Network& net, const Mesh& mesh,
                     const ExactDensity& exact, double t) {
    std::ofstream out = open_or_throw(file);
    out << "arc,t,x,rho\n";
    for (std::size_t h = 0; h < net.arc_count(); ++h)
        for (std::size_t k = 0; k < mesh.cells(h); ++k) {
            double x = mesh.cell_center(net, h, k);
            out << h << ',' << g17(t) << ',' << g17(x) << ',' << g17(exact(t, x, h)) << '\n';
        }
    close_or_throw(out, file);
}

void write_conservation_csv(const std::filesystem::path& file,
                            const std::vector<JunctionRecord>& records) {
    std::ofstream out = open_or_throw(file);
    out << "step,t,p,residual\n";
    for (const JunctionRecord& r : records)
        out << r.step << ',' << g17(r.time) << ',' << g17(r.p) << ',' << g17(r.residual)
            << '\n';
    close_or_throw(out, file);
}

void write_error_csv(const std::filesystem::path& file, const std::vector<ErrorReport>& reports) {
    std::ofstream out = open_or_throw(file);
    out << "time,cells_per_arc,err_network,err_incoming,err_outgoing\n";
    for (const ErrorReport& r : reports)
        out << g17(r.time) << ',' << r.cells_per_arc << ',' << opt17(r.whole) << ','
            << opt17(r.incoming) << ',' << opt17(r.outgoing) << '\n';
    close_or_throw(out, file);
}

void write_convergence_csv(const std::filesystem::path& file,
                           const std::vector<ErrorReport>& reports) {
    std::ofstream out = open_or_throw(file);
    out << "cells_per_arc,err_network,rate_network,err_incoming,rate_incoming,"
           "err_outgoing,rate_outgoing\n";
    auto rate = [&](std::size_t i, const std::optional<double>& coarse,
                    const std::optional<double>& fine) -> std::string {
        if (i == 0 || !coarse || !fine || *coarse <= 0.0 || *fine <= 0.0) return {};
        double ratio = static_cast<double>(reports[i].cells_per_arc) /
                       static_cast<double>(reports[i - 1].cells_per_arc);
        return g17(std::log(*coarse / *fine) / std::log(ratio));
    };
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const ErrorReport& r = reports[i];
        const ErrorReport* prev = i > 0 ? &reports[i - 1] : nullptr;
        out << r.cells_per_arc << ',' << opt17(r.whole) << ','
            << rate(i, prev ? prev->whole : std::nullopt, r.whole) << ','
            << opt17(r.incoming) << ','
            << rate(i, prev ? prev->incoming : std::nullopt, r.incoming) << ','
            << opt17(r.outgoing) << ','
            << rate(i, prev ? prev->outgoing : std::nullopt, r.outgoing) << '\n';
    }
    close_or_throw(out, file);
}

void write_shift_report_csv(const std::filesystem::path& file, const std::vector<double>& times,
                            const std::vector<double>& max_diffs) {
    if (times.size() != max_diffs.size())
        throw std::invalid_argument("shift report needs one diff per time");
    std::ofstream out = open_or_throw(file);
    out << "t,max_abs_diff\n";
    for (std::size_t i = 0; i < times.size(); ++i)
        out << g17(times[i]) << ',' << g17(max_diffs[i]) << '\n';
    close_or_throw(out, file);
}

void write_line_csv(const std::filesystem::path& file, const std::vector<double>& cells,
                    double dx, double t) {
    std::ofstream out = open_or_throw(file);
    out << "arc,t,x,rho\n";
    for (std::size_t k = 0; k < cells.size(); ++k)
        out << 0 << ',' << g17(t) << ',' << g17((static_cast<double>(k) + 0.5) * dx) << ','
            << g17(cells[k]) << '\n';
    close_or_throw(out, file);
}

}  // namespace netjunction
