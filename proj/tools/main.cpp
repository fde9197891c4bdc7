// consensus-spectra: batch front-end for the convergence-rate bound library.
// Subcommands: table (family bound table vs closed-form references), bounds
// (full report for one graph/rule), simulate (trajectory dump), verify
// (property suites). Exit code 0 iff every requested check passed.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "consensus/bounds.hpp"
#include "consensus/graph.hpp"
#include "consensus/io.hpp"
#include "consensus/matrix.hpp"
#include "consensus/rng.hpp"
#include "consensus/sim.hpp"
#include "consensus/spectral.hpp"
#include "consensus/suites.hpp"
#include "consensus/tolerances.hpp"

namespace {

using namespace consensus;

int worker_count(int rows) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("CONSENSUS_SPECTRA_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) hw = std::min(hw, cap);
    }
    return std::max(1, std::min(hw, rows));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

struct TableRow {
    std::string family;
    int param = 0;
    int n = 0;
    std::string rule;
    double bound = 1.0;
    double reference = 1.0;
    double rel_dev = 0.0;
    std::string note;
};

// Reference gap (1 - tabulated bound) of the closed-form table. FixedWeight
// entries are symbolic in Q = sum_i q_i and q_max; evaluated with the default
// caps q_i = d_max.
double reference_gap(Family f, Rule rule, int p, int n, int d_max) {
    double Q = static_cast<double>(n) * d_max;
    switch (f) {
        case Family::ring:
            return rule == Rule::fixed_weight ? 2.0 / (Q * n) : 16.0 / (3.0 * n * n);
        case Family::hypercube:
            return rule == Rule::fixed_weight ? 1.0 / Q : 1.0 / (static_cast<double>(p) * p);
        case Family::star:
            if (rule == Rule::fixed_weight) return 1.0 / (2.0 * d_max);
            return rule == Rule::metropolis ? 1.0 / (3.0 * n) : 1.0 / (6.0 * n);
        case Family::two_star:
            if (rule == Rule::fixed_weight) return 1.0 / (3.0 * Q);
            return rule == Rule::metropolis ? 8.0 / (3.0 * n * n) : 1.0 / (9.0 * n);
        case Family::binary_tree: {
            double lg = std::log2(static_cast<double>(n));
            if (rule == Rule::fixed_weight) return 2.0 / (Q * n);
            return rule == Rule::metropolis ? 1.0 / (2.0 * n * lg) : 1.0 / (4.0 * n * lg);
        }
        case Family::grid:
            if (rule == Rule::fixed_weight) return 1.0 / (Q * std::sqrt(static_cast<double>(n)));
            return 2.0 / (5.0 * n * std::sqrt(static_cast<double>(n)));
        case Family::barbell: {
            double np1 = n + 1.0;
            if (rule == Rule::fixed_weight) return 2.0 / (Q * n);
            return rule == Rule::metropolis ? 1.0 / (np1 * np1) : 8.0 / (np1 * np1 * np1);
        }
        default:
            throw std::invalid_argument("no tabulated reference for " + family_name(f));
    }
}

TableRow compute_table_row(Family f, int p, Rule rule) {
    TableRow row;
    row.family = family_name(f);
    row.param = p;
    row.rule = rule_name(rule);
    DirectedGraph g = make_family(f, p);
    row.n = g.n;
    FamilyMetrics fm = family_metrics(f, p);
    Matrix A = build_rule(g, rule, RuleParams{});
    PerronVector pi = perron(A);

    double gap;
    if (f == Family::barbell && rule == Rule::equal_neighbor) {
        // The tabulated barbell entry stems from an eigenvalue lower bound;
        // the computable counterpart is the exact spectral gap.
        gap = 1.0 - reversible_spectrum(A, pi).lambda2;
        row.note = "exact spectral gap";
    } else {
        double alpha = min_weighted_entry(A, pi);
        double pmax = pi.max();
        gap = std::max(alpha / fm.delta_star,
                       alpha / (pmax * pmax * fm.diam * static_cast<double>(fm.bottleneck)));
        if (rule == Rule::metropolis)
            gap = std::max(gap, 1.0 / (4.0 * static_cast<double>(fm.bottleneck)));
    }
    row.bound = 1.0 - gap;
    row.reference = 1.0 - reference_gap(f, rule, p, g.n, g.max_degree());
    row.rel_dev = (gap - (1.0 - row.reference)) / (1.0 - row.reference);
    return row;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::string out = "family,param,n,rule,rate_bound,reference,rel_deviation\n";
    for (const auto& r : rows)
        out += r.family + "," + std::to_string(r.param) + "," + std::to_string(r.n) + "," +
               r.rule + "," + format_double(r.bound) + "," + format_double(r.reference) + "," +
               format_double(r.rel_dev) + "\n";
    return out;
}

std::string table_json(const std::vector<TableRow>& rows) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out += "  {\"family\": \"" + r.family + "\", \"param\": " + std::to_string(r.param) +
               ", \"n\": " + std::to_string(r.n) + ", \"rule\": \"" + r.rule +
               "\", \"rate_bound\": " + format_double(r.bound) +
               ", \"reference\": " + format_double(r.reference) +
               ", \"rel_deviation\": " + format_double(r.rel_dev) + "}" +
               (i + 1 < rows.size() ? ",\n" : "\n");
    }
    return out + "]\n";
}

// Default size parameters: largest instances of the reference table regime.
const std::vector<std::pair<Family, int>> kDefaultTable = {
    {Family::ring, 65},     {Family::hypercube, 6}, {Family::star, 64},
    {Family::two_star, 64}, {Family::binary_tree, 6}, {Family::grid, 8},
    {Family::barbell, 17},
};

int cmd_table(const std::string& family, const std::vector<int>& sizes,
              const std::string& rule_filter, const std::string& format,
              const std::string& out_path) {
    std::vector<std::pair<Family, int>> specs;
    if (family.empty()) {
        specs = kDefaultTable;
    } else {
        Family f = family_from_name(family);
        if (sizes.empty()) {
            for (const auto& [df, dp] : kDefaultTable)
                if (df == f) specs.emplace_back(df, dp);
            if (specs.empty())
                throw std::invalid_argument("no default size for family " + family);
        } else {
            for (int p : sizes) specs.emplace_back(f, p);
        }
    }
    std::vector<Rule> rules;
    if (rule_filter.empty())
        rules = {Rule::equal_neighbor, Rule::fixed_weight, Rule::metropolis};
    else
        rules = {rule_from_name(rule_filter)};

    struct Job {
        Family f;
        int p;
        Rule rule;
    };
    std::vector<Job> jobs;
    for (const auto& [f, p] : specs)
        for (Rule r : rules) jobs.push_back({f, p, r});

    std::vector<TableRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
            rows[i] = compute_table_row(jobs[i].f, jobs[i].p, jobs[i].rule);
    };
    int nthreads = worker_count(static_cast<int>(jobs.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    emit(format == "json" ? table_json(rows) : table_csv(rows), out_path);
    return 0;
}

int cmd_bounds(const std::string& family, int size, const std::string& graph_file,
               const std::string& rule, const std::string& format,
               const std::string& out_path) {
    DirectedGraph g;
    std::string graph_id;
    if (!graph_file.empty()) {
        GraphLoadResult load = load_graph_file(graph_file);
        for (const auto& w : load.warnings) std::cerr << "warning: " << w << "\n";
        g = load.graph;
        graph_id = graph_file;
    } else if (!family.empty()) {
        g = make_family(family_from_name(family), size);
        graph_id = family + "-" + std::to_string(size);
    } else {
        throw std::invalid_argument("bounds: need --graph-file or --family/--size");
    }
    BoundReport rep = full_report(g, graph_id, rule_from_name(rule), RuleParams{});
    emit(format == "json" ? report_to_json(rep) : reports_to_csv({rep}), out_path);
    return rep.sound ? 0 : 1;
}

int cmd_simulate(const std::string& family, int size, const std::string& graph_file,
                 const std::string& schedule_file, const std::string& rule, long steps,
                 std::uint64_t seed, const std::string& format, const std::string& out_path) {
    GraphSchedule sched;
    std::string ref;
    if (!schedule_file.empty()) {
        sched = load_schedule_file(schedule_file);
        ref = schedule_file;
    } else if (family == "ot_two_star") {
        sched = ot_two_star_schedule(size);
        ref = "ot_two_star-" + std::to_string(size);
    } else if (!graph_file.empty()) {
        GraphLoadResult load = load_graph_file(graph_file);
        for (const auto& w : load.warnings) std::cerr << "warning: " << w << "\n";
        sched = constant_schedule(load.graph);
        ref = graph_file;
    } else if (!family.empty()) {
        sched = constant_schedule(make_family(family_from_name(family), size));
        ref = family + "-" + std::to_string(size);
    } else {
        throw std::invalid_argument(
            "simulate: need --schedule-file, --graph-file or --family/--size");
    }
    Rng rng(seed);
    std::vector<double> x0 = rng.centered_vector(sched.graphs[0].n);
    Trajectory traj = simulate(sched, rule_from_name(rule), RuleParams{}, x0, steps);
    if (format == "json")
        emit(trajectory_header_json(traj, ref, rule, seed), out_path);
    else
        emit(trajectory_to_csv(traj), out_path);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    std::vector<std::string> names;
    if (suite == "all")
        names = {"soundness", "identities", "quadratic", "slow_examples"};
    else
        names = {suite};
    bool all_ok = true;
    for (const auto& name : names) {
        SuiteResult res = run_suite(name, seed);
        for (const auto& msg : res.messages) std::cout << "FAIL " << res.name << ": " << msg << "\n";
        std::cout << "suite " << res.name << ": " << res.checks << " checks, " << res.failures
                  << " failures -> " << (res.ok() ? "pass" : "FAIL") << "\n";
        all_ok = all_ok && res.ok();
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral and geometric convergence-rate bounds for distributed averaging"};
    app.require_subcommand(1);

    std::vector<std::string> tol_overrides;
    app.add_option("--tol-override", tol_overrides, "Tolerance override key=value")
        ->expected(-1);

    std::string family, rule, graph_file, schedule_file, format = "csv", out_path, suite;
    int size = 0;
    std::vector<int> sizes;
    long steps = 10000;
    std::uint64_t seed = 0;

    auto* table = app.add_subcommand("table", "Family bound table vs tabulated references");
    table->add_option("--family", family, "Restrict to one family");
    table->add_option("--sizes", sizes, "Size parameters for the chosen family");
    table->add_option("--rule", rule, "Restrict to one rule");
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", out_path, "Output file (stdout when absent)");

    auto* bounds = app.add_subcommand("bounds", "Full bound report for one graph and rule");
    bounds->add_option("--family", family, "Graph family");
    bounds->add_option("--size", size, "Family size parameter");
    bounds->add_option("--graph-file", graph_file, "Graph text file");
    bounds->add_option("--rule", rule, "Weight rule")->required();
    bounds->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--out", out_path, "Output file (stdout when absent)");

    auto* sim = app.add_subcommand("simulate", "Run the averaging iteration and dump t,V,N");
    sim->add_option("--family", family, "Graph family (ot_two_star for the rotating schedule)");
    sim->add_option("--size", size, "Family size parameter");
    sim->add_option("--graph-file", graph_file, "Graph text file");
    sim->add_option("--schedule-file", schedule_file, "Schedule JSON file");
    sim->add_option("--rule", rule, "Weight rule")->required();
    sim->add_option("--steps", steps, "Step limit");
    sim->add_option("--seed", seed, "Seed for the initial vector");
    sim->add_option("--format", format, "csv (trajectory) or json (run header)")
        ->check(CLI::IsMember({"csv", "json"}));
    sim->add_option("--out", out_path, "Output file (stdout when absent)");

    auto* verify = app.add_subcommand("verify", "Run a property suite");
    verify
        ->add_option("--suite", suite, "soundness, identities, quadratic, slow_examples or all")
        ->required()
        ->check(CLI::IsMember({"soundness", "identities", "quadratic", "slow_examples", "all"}));
    verify->add_option("--seed", seed, "Suite seed");

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& kv : tol_overrides) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--tol-override expects key=value, got " + kv);
            Tolerances::global().set(kv.substr(0, eq), std::stod(kv.substr(eq + 1)));
        }
        if (table->parsed()) return cmd_table(family, sizes, rule, format, out_path);
        if (bounds->parsed()) return cmd_bounds(family, size, graph_file, rule, format, out_path);
        if (sim->parsed())
            return cmd_simulate(family, size, graph_file, schedule_file, rule, steps, seed,
                                format, out_path);
        if (verify->parsed()) return cmd_verify(suite, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
