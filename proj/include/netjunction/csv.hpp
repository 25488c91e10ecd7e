#pragma once

#include <filesystem>
#include <vector>

#include "netjunction/analysis.hpp"
#include "netjunction/scheme.hpp"

namespace netjunction {

// All writers emit 17 significant digits so values round-trip exactly, and
// throw std::runtime_error when the file cannot be opened.

// Header arc,t,x,rho; one row per cell, sorted by (arc, x); x is the cell
// center and t the snapshot's actual step time.
void write_snapshot_csv(const std::filesystem::path& file, const Network& net, const Mesh& mesh,
                        const GridSolution& state);

// Same layout, sampling a reference density at the cell centers at time t.
void write_exact_csv(const std::filesystem::path& file, const Network& net, const Mesh& mesh,
                     const ExactDensity& exact, double t);

// Header step,t,p,residual; one row per completed step.
void write_conservation_csv(const std::filesystem::path& file,
                            const std::vector<JunctionRecord>& records);

// Header time,cells_per_arc,err_network,err_incoming,err_outgoing; undefined
// entries stay empty.
void write_error_csv(const std::filesystem::path& file, const std::vector<ErrorReport>& reports);

// Resolution ladder with pairwise observed orders; first-row rates are empty.
// Header cells_per_arc,err_network,rate_network,err_incoming,rate_incoming,
// err_outgoing,rate_outgoing.
void write_convergence_csv(const std::filesystem::path& file,
                           const std::vector<ErrorReport>& reports);

// Header t,max_abs_diff; the cellwise gap between two runs meant to agree.
void write_shift_report_csv(const std::filesystem::path& file, const std::vector<double>& times,
                            const std::vector<double>& max_diffs);

// Snapshot layout for a single junction-free interval, written as arc 0.
void write_line_csv(const std::filesystem::path& file, const std::vector<double>& cells,
                    double dx, double t);

}  // namespace netjunction
