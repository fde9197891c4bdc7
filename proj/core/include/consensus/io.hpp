#pragma once

#include <string>
#include <vector>

#include "consensus/bounds.hpp"
#include "consensus/graph.hpp"
#include "consensus/matrix.hpp"
#include "consensus/sim.hpp"
#include "consensus/spectral.hpp"

namespace consensus {

// Formats a double with 17 significant digits (round-trips exactly).
std::string format_double(double v);

// --- graph text format ----------------------------------------------------------
// First line "n <count>", then one "i j" directed arc per line, 1-based.
// Self-loops may be omitted in files; they are added on load and a warning is
// collected for each node that needed one.

struct GraphLoadResult {
    DirectedGraph graph;
    std::vector<std::string> warnings;
};

GraphLoadResult parse_graph_text(const std::string& text);
GraphLoadResult load_graph_file(const std::string& path);
std::string graph_to_text(const DirectedGraph& g);

// --- schedule JSON -----------------------------------------------------------
// {"kind": ..., "period": ..., "graphs": ["file1", "file2", ...]}; graph paths
// are resolved relative to the schedule file's directory.

GraphSchedule load_schedule_file(const std::string& path);
std::string schedule_to_json(const GraphSchedule& s, const std::vector<std::string>& graph_refs);

// --- matrix dump -------------------------------------------------------------
// {"n": ..., "rows": [[...]], "rule": ..., "graph_ref": ...}

std::string matrix_to_json(const Matrix& m, const std::string& rule, const std::string& graph_ref);
Matrix matrix_from_json(const std::string& text);

// --- spectrum dump -----------------------------------------------------------
// {"eigenvalues": [...], "lambda2": ..., "lambda_n": ..., "method": "jacobi",
//  "offdiag": ...}

std::string spectrum_to_json(const Spectrum& s);

// --- bound reports -----------------------------------------------------------
// CSV columns are fixed:
// graph,rule,n,lambda2,sigma2,eta,kappa,kappa_tilde,beta_b,beta_ds,
// cheeger_lo,cheeger_hi,rate_bound,sound

std::string report_csv_header();
std::string report_to_csv_row(const BoundReport& r);
std::string reports_to_csv(const std::vector<BoundReport>& rs);
std::string report_to_json(const BoundReport& r);
std::string reports_to_json(const std::vector<BoundReport>& rs);

// --- trajectory dump ----------------------------------------------------------
// CSV "t,V,N" plus a JSON header describing the run.

std::string trajectory_to_csv(const Trajectory& t);
std::string trajectory_header_json(const Trajectory& t, const std::string& schedule_ref,
                                   const std::string& rule, std::uint64_t seed);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace consensus
