#include "consensus/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace consensus {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

GraphLoadResult parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "n")
        throw std::runtime_error("graph text: expected leading \"n <count>\"");
    int n = 0;
    if (!(in >> n) || n <= 0) throw std::runtime_error("graph text: bad node count");
    std::vector<std::pair<int, int>> arcs;
    std::vector<bool> has_loop(static_cast<size_t>(n), false);
    int i, j;
    while (in >> i >> j) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw std::runtime_error("graph text: arc endpoint out of range");
        if (i == j) has_loop[static_cast<size_t>(i - 1)] = true;
        arcs.emplace_back(i - 1, j - 1);
    }
    if (!in.eof()) throw std::runtime_error("graph text: trailing garbage");
    GraphLoadResult res;
    res.graph = DirectedGraph::from_arcs(n, std::move(arcs));
    for (int v = 0; v < n; ++v)
        if (!has_loop[static_cast<size_t>(v)])
            res.warnings.push_back("added missing self-loop at node " + std::to_string(v + 1));
    return res;
}

GraphLoadResult load_graph_file(const std::string& path) {
    return parse_graph_text(read_file(path));
}

std::string graph_to_text(const DirectedGraph& g) {
    std::ostringstream out;
    out << "n " << g.n << "\n";
    for (int i = 0; i < g.n; ++i)
        for (int j : g.out[static_cast<size_t>(i)]) out << i + 1 << " " << j + 1 << "\n";
    return out.str();
}

GraphSchedule load_schedule_file(const std::string& path) {
    json doc = json::parse(read_file(path));
    GraphSchedule sched;
    sched.kind = doc.value("kind", "custom");
    sched.period = doc.value("period", 0);
    auto dir = std::filesystem::path(path).parent_path();
    for (const auto& ref : doc.at("graphs")) {
        auto p = std::filesystem::path(ref.get<std::string>());
        if (p.is_relative()) p = dir / p;
        sched.graphs.push_back(load_graph_file(p.string()).graph);
    }
    if (sched.graphs.empty()) throw std::runtime_error("schedule: no graphs listed");
    if (sched.period < 0 || sched.period > static_cast<int>(sched.graphs.size()))
        throw std::runtime_error("schedule: period out of range");
    for (const auto& g : sched.graphs)
        if (g.n != sched.graphs[0].n)
            throw std::runtime_error("schedule: graphs have mismatched node counts");
    return sched;
}

std::string schedule_to_json(const GraphSchedule& s, const std::vector<std::string>& graph_refs) {
    json doc;
    doc["kind"] = s.kind;
    doc["period"] = s.period;
    doc["graphs"] = graph_refs;
    return doc.dump(2) + "\n";
}

std::string matrix_to_json(const Matrix& m, const std::string& rule,
                           const std::string& graph_ref) {
    std::ostringstream out;
    out << "{\n  \"n\": " << m.n << ",\n  \"rule\": " << json(rule).dump()
        << ",\n  \"graph_ref\": " << json(graph_ref).dump() << ",\n  \"rows\": [\n";
    for (int i = 0; i < m.n; ++i) {
        out << "    [";
        for (int j = 0; j < m.n; ++j) {
            if (j) out << ", ";
            out << format_double(m(i, j));
        }
        out << (i + 1 < m.n ? "],\n" : "]\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

Matrix matrix_from_json(const std::string& text) {
    json doc = json::parse(text);
    int n = doc.at("n").get<int>();
    Matrix m(n);
    const auto& rows = doc.at("rows");
    if (static_cast<int>(rows.size()) != n) throw std::runtime_error("matrix json: bad row count");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::runtime_error("matrix json: bad column count");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j].get<double>();
    }
    return m;
}

std::string spectrum_to_json(const Spectrum& s) {
    std::ostringstream out;
    out << "{\n  \"eigenvalues\": [";
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        if (i) out << ", ";
        out << format_double(s.eigenvalues[i]);
    }
    out << "],\n  \"lambda2\": " << format_double(s.lambda2)
        << ",\n  \"lambda_n\": " << format_double(s.lambda_n)
        << ",\n  \"method\": \"jacobi\",\n  \"offdiag\": " << format_double(s.achieved_offdiag)
        << "\n}\n";
    return out.str();
}

std::string report_csv_header() {
    return "graph,rule,n,lambda2,sigma2,eta,kappa,kappa_tilde,beta_b,beta_ds,"
           "cheeger_lo,cheeger_hi,rate_bound,sound";
}

namespace {

std::string opt_cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

std::string report_to_csv_row(const BoundReport& r) {
    std::ostringstream out;
    out << r.graph_id << ',' << r.rule << ',' << r.n << ',' << format_double(r.lambda2) << ','
        << format_double(r.sigma2) << ',' << opt_cell(r.eta) << ',' << opt_cell(r.kappa) << ','
        << opt_cell(r.kappa_tilde) << ',' << opt_cell(r.beta_b) << ',' << opt_cell(r.beta_ds)
        << ',' << opt_cell(r.cheeger_lo) << ',' << opt_cell(r.cheeger_hi) << ','
        << format_double(r.rate_bound) << ',' << (r.sound ? "true" : "false");
    return out.str();
}

std::string reports_to_csv(const std::vector<BoundReport>& rs) {
    std::ostringstream out;
    out << report_csv_header() << "\n";
    for (const auto& r : rs) out << report_to_csv_row(r) << "\n";
    return out.str();
}

namespace {

json report_json_object(const BoundReport& r) {
    json o;
    o["graph"] = r.graph_id;
    o["rule"] = r.rule;
    o["n"] = r.n;
    o["lambda2"] = r.lambda2;
    o["sigma2"] = r.sigma2;
    auto put = [&o](const char* key, const std::optional<double>& v) {
        if (v)
            o[key] = *v;
        else
            o[key] = nullptr;
    };
    put("eta", r.eta);
    put("kappa", r.kappa);
    put("kappa_tilde", r.kappa_tilde);
    put("beta_b", r.beta_b);
    put("beta_ds", r.beta_ds);
    put("beta_a", r.beta_a);
    put("cheeger_lo", r.cheeger_lo);
    put("cheeger_hi", r.cheeger_hi);
    o["rate_bound"] = r.rate_bound;
    o["sound"] = r.sound;
    if (!r.notes.empty()) o["notes"] = r.notes;
    return o;
}

}  // namespace

std::string report_to_json(const BoundReport& r) { return report_json_object(r).dump(2) + "\n"; }

std::string reports_to_json(const std::vector<BoundReport>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(report_json_object(r));
    return arr.dump(2) + "\n";
}

std::string trajectory_to_csv(const Trajectory& t) {
    std::ostringstream out;
    out << "t,V,N\n";
    for (const auto& pt : t.snapshots)
        out << pt.t << ',' << format_double(pt.V) << ',' << format_double(pt.N) << "\n";
    return out.str();
}

std::string trajectory_header_json(const Trajectory& t, const std::string& schedule_ref,
                                   const std::string& rule, std::uint64_t seed) {
    json o;
    o["schedule"] = schedule_ref;
    o["rule"] = rule;
    o["seed"] = seed;
    o["n"] = static_cast<int>(t.x0.size());
    o["steps"] = t.steps;
    o["converged"] = t.converged;
    o["rho_hat"] = t.rho_hat;
    o["perron_constant"] = t.perron_constant;
    if (t.perron_constant) {
        o["consensus_value"] = t.consensus_value;
        o["conservation_drift"] = t.conservation_drift;
    }
    return o.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace consensus
