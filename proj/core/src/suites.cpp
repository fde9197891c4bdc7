#include "consensus/suites.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "consensus/bounds.hpp"
#include "consensus/graph.hpp"
#include "consensus/matrix.hpp"
#include "consensus/rng.hpp"
#include "consensus/sim.hpp"
#include "consensus/spectral.hpp"
#include "consensus/tolerances.hpp"

namespace consensus {

namespace {

void record(SuiteResult& r, bool pass, const std::string& msg) {
    ++r.checks;
    if (!pass) {
        ++r.failures;
        r.messages.push_back(msg);
    }
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

}  // namespace

SuiteResult run_soundness_suite(std::uint64_t seed) {
    SuiteResult res;
    res.name = "soundness";
    Rng rng(seed);
    const Rule rules[] = {Rule::metropolis, Rule::lazy_metropolis, Rule::equal_neighbor};
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.uniform_int(4, 12);
        DirectedGraph g = random_connected_graph(n, rng.uniform_int(0, n), rng);
        for (Rule rule : rules) {
            BoundReport rep =
                full_report(g, "random#" + std::to_string(trial), rule, RuleParams{});
            record(res, rep.sound,
                   "trial " + std::to_string(trial) + " " + rule_name(rule) +
                       ": bound below lambda2=" + fmt(rep.lambda2) + " (" + rep.notes + ")");
        }
    }
    return res;
}

SuiteResult run_identities_suite(std::uint64_t seed) {
    SuiteResult res;
    res.name = "identities";
    Rng rng(seed);
    const double tol = Tolerances::global().identity;
    const Rule rules[] = {Rule::metropolis, Rule::lazy_metropolis, Rule::equal_neighbor};
    for (int trial = 0; trial < 2500; ++trial) {
        int n = rng.uniform_int(3, 10);
        DirectedGraph g = random_connected_graph(n, rng.uniform_int(0, n), rng);
        Rule rule = rules[trial % 3];
        Matrix P = build_rule(g, rule, RuleParams{});
        PerronVector pi = perron(P);
        PiGeometry geo(pi);
        std::vector<double> x = geo.project(rng.centered_vector(n));

        double q = quadratic_form(P, geo, x);
        double green = green_double_sum(P, geo, x);
        record(res, std::abs(q - green) <= tol,
               "green formula: " + fmt(q) + " vs " + fmt(green));

        double nsq = geo.norm(x) * geo.norm(x);
        double pair_sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                pair_sum += 0.5 * pi.p[i] * pi.p[j] * (x[i] - x[j]) * (x[i] - x[j]);
        record(res, std::abs(nsq - pair_sum) <= tol,
               "variance identity: " + fmt(nsq) + " vs " + fmt(pair_sum));

        record(res, seminorm_N(x) >= std::sqrt(2.0) * geo.norm(x) - tol,
               "N(x) >= sqrt(2)||x||_pi: " + fmt(seminorm_N(x)) + " vs " +
                   fmt(std::sqrt(2.0) * geo.norm(x)));

        Matrix adj = adjoint(P, pi);
        Matrix invol = adjoint(adj, pi);
        double adj_err = adj.max_row_sum_error();
        double invol_err = 0.0;
        for (std::size_t k = 0; k < P.a.size(); ++k)
            invol_err = std::max(invol_err, std::abs(invol.a[k] - P.a[k]));
        record(res, adj_err <= tol && invol_err <= tol,
               "adjoint stochasticity/involution: " + fmt(adj_err) + ", " + fmt(invol_err));

        Spectrum sp = reversible_spectrum(P, pi);
        Spectrum sq = reversible_spectrum(gram(P, pi), pi);
        double expect = std::max(sp.lambda_n * sp.lambda_n, sp.lambda2 * sp.lambda2);
        record(res, std::abs(sq.lambda2 - expect) <= tol,
               "reversible square: lambda2(A^dag A)=" + fmt(sq.lambda2) + " vs max(l_n^2,l_2^2)=" +
                   fmt(expect));
    }
    return res;
}

SuiteResult run_quadratic_suite(std::uint64_t seed) {
    SuiteResult res;
    res.name = "quadratic";
    Rng rng(seed);
    const int sizes[] = {8, 16, 32};
    const double tol = 1e-10;
    for (int i = 0; i < 50; ++i) {
        int n = sizes[i % 3];
        GraphSchedule sched = random_connected_schedule(n, 20, rng);
        std::uint64_t trial_seed = rng.engine()();

        double met_step = quadratic_metropolis_bound(n);
        ContractionReport metc =
            contraction_check(sched, Rule::metropolis, RuleParams{}, 2, 200, trial_seed);
        record(res, metc.worst_ratio <= met_step * met_step + tol,
               "schedule " + std::to_string(i) + " metropolis ratio " + fmt(metc.worst_ratio) +
                   " > " + fmt(met_step * met_step));

        double lazy_step = quadratic_lazy_bound(n);
        ContractionReport lazyc =
            contraction_check(sched, Rule::lazy_metropolis, RuleParams{}, 2, 200, trial_seed);
        record(res, lazyc.worst_ratio <= lazy_step * lazy_step + tol,
               "schedule " + std::to_string(i) + " lazy ratio " + fmt(lazyc.worst_ratio) + " > " +
                   fmt(lazy_step * lazy_step));
    }
    return res;
}

SuiteResult run_slow_examples_suite(std::uint64_t seed) {
    SuiteResult res;
    res.name = "slow_examples";
    Rng rng(seed);

    GraphSchedule ot = ot_two_star_schedule(12);
    std::vector<double> x0 = rng.centered_vector(12);
    Trajectory slow = simulate(ot, Rule::equal_neighbor, RuleParams{}, x0, 100000);
    record(res, slow.rho_hat >= 0.875,
           "two-star EqualNeighbor rho_hat=" + fmt(slow.rho_hat) + " < 0.875");
    Trajectory fast = simulate(ot, Rule::metropolis, RuleParams{}, x0, 100000);
    double met_limit = 1.0 - 1.0 / (4.0 * 144.0);
    record(res, fast.rho_hat > 0.0 && fast.rho_hat <= met_limit,
           "two-star Metropolis rho_hat=" + fmt(fast.rho_hat) + " > " + fmt(met_limit));
    for (const auto& g : ot.graphs) {
        Matrix A = equal_neighbor(g);
        PerronVector pi = perron(A);
        // Hub agents carry pi > 1/6, every other agent pi > 2/(3n).
        for (int i = 0; i < 12; ++i) {
            bool hub = g.degree(i) > 2;
            double floor_i = hub ? 1.0 / 6.0 : 2.0 / 36.0;
            record(res, pi.p[static_cast<size_t>(i)] > floor_i,
                   "two-star Perron entry " + fmt(pi.p[static_cast<size_t>(i)]) +
                       " <= " + fmt(floor_i));
        }
    }

    // Barbell p=3, EqualNeighbor: starting from the lambda2 eigenvector the
    // empirical rate equals lambda2. The eigenvector is found by projected
    // power iteration (|lambda_n| < lambda2 here).
    DirectedGraph barbell = make_family(Family::barbell, 3);
    Matrix N = equal_neighbor(barbell);
    PerronVector pi = perron(N);
    PiGeometry geo(pi);
    double lambda2 = reversible_spectrum(N, pi).lambda2;
    std::vector<double> v = geo.project(rng.centered_vector(barbell.n));
    for (int it = 0; it < 4000; ++it) {
        v = geo.project(N.apply(v));
        double norm = geo.norm(v);
        for (double& c : v) c /= norm;
    }
    Trajectory eig = simulate(constant_schedule(barbell), Rule::equal_neighbor, RuleParams{}, v,
                              100000);
    record(res, std::abs(eig.rho_hat - lambda2) <= 1e-8,
           "barbell eigenvector rate " + fmt(eig.rho_hat) + " vs lambda2 " + fmt(lambda2));

    // Consensus start: zero spread from step 0, immediate convergence.
    std::vector<double> flat(barbell.n, 0.25);
    Trajectory still = simulate(constant_schedule(barbell), Rule::equal_neighbor, RuleParams{},
                                flat, 100);
    record(res, still.converged && still.steps <= 1,
           "consensus start did not stop immediately");
    return res;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "soundness") return run_soundness_suite(seed);
    if (name == "identities") return run_identities_suite(seed);
    if (name == "quadratic") return run_quadratic_suite(seed);
    if (name == "slow_examples") return run_slow_examples_suite(seed);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace consensus
