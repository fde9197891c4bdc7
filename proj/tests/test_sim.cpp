#include <doctest.h>

#include <cmath>
#include <numeric>

#include "consensus/bounds.hpp"
#include "consensus/rng.hpp"
#include "consensus/sim.hpp"
#include "consensus/spectral.hpp"

using namespace consensus;

TEST_CASE("flat start is converged at t = 0") {
    GraphSchedule sched = constant_schedule(make_family(Family::ring, 9));
    std::vector<double> x0(9, 0.25);
    Trajectory traj = simulate(sched, Rule::metropolis, RuleParams{}, x0, 100);
    CHECK(traj.converged);
    CHECK(traj.steps == 0);
    CHECK(traj.snapshots.size() == 1);
    CHECK(traj.snapshots[0].V == doctest::Approx(0.0));
    CHECK(traj.snapshots[0].N == doctest::Approx(0.0));
}

TEST_CASE("metropolis conserves the mean") {
    GraphSchedule sched = constant_schedule(make_family(Family::grid, 3));
    Rng rng(77);
    std::vector<double> x0 = rng.centered_vector(9);
    double shift = 0.4;
    for (double& v : x0) v += shift;
    Trajectory traj = simulate(sched, Rule::metropolis, RuleParams{}, x0, 400);
    CHECK(traj.perron_constant);
    CHECK(traj.consensus_value == doctest::Approx(shift).epsilon(1e-9));
    CHECK(traj.conservation_drift <= 1e-10);
    CHECK(traj.converged);
    double final_spread = traj.snapshots.back().N;
    CHECK(final_spread < 1e-9);
}

TEST_CASE("eigenvector start decays at exactly lambda2") {
    DirectedGraph barbell = make_family(Family::barbell, 3);
    Matrix en = equal_neighbor(barbell);
    PerronVector pi = perron(en);
    PiGeometry geo(pi);
    Spectrum spec = reversible_spectrum(en, pi);

    // Projected power iteration for the lambda2 eigenvector.
    Rng rng(5);
    std::vector<double> v = geo.project(rng.centered_vector(en.n));
    for (int it = 0; it < 4000; ++it) {
        v = geo.project(en.apply(v));
        double norm = geo.norm(v);
        REQUIRE(norm > 0.0);
        for (double& e : v) e /= norm;
    }

    GraphSchedule sched = constant_schedule(barbell);
    Trajectory traj = simulate(sched, Rule::equal_neighbor, RuleParams{}, v, 300);
    for (size_t t = 1; t + 1 < traj.snapshots.size(); ++t) {
        double before = traj.snapshots[t - 1].V;
        if (before < 1e-24) break;
        double ratio = traj.snapshots[t].V / before;
        CHECK(ratio == doctest::Approx(spec.lambda2 * spec.lambda2).epsilon(1e-6));
    }
    CHECK(std::abs(traj.rho_hat - spec.lambda2) <= 1e-6);
}

TEST_CASE("two-star rotation schedule structure") {
    GraphSchedule sched = ot_two_star_schedule(8);
    CHECK(sched.period == 4);
    CHECK(sched.graphs.size() == 4);
    CHECK(sched.kind == "ot_two_star");
    for (const DirectedGraph& g : sched.graphs) {
        CHECK(g.n == 8);
        CHECK(g.is_bidirectional());
        CHECK(g.strongly_connected());
        CHECK(g.has_all_self_loops());
        // Two hubs of degree 5 (3 leaves + hub link + self), six leaves of
        // degree 2.
        int hubs = 0, leaves = 0;
        for (int i = 0; i < g.n; ++i) {
            if (g.degree(i) == 5) ++hubs;
            if (g.degree(i) == 2) ++leaves;
        }
        CHECK(hubs == 2);
        CHECK(leaves == 6);
        CHECK(diameter(g) == 3);
    }
    // Consecutive steps differ (the second star rotates).
    bool all_same = true;
    for (int t = 1; t < 4; ++t) {
        if (sched.graphs[t].in != sched.graphs[0].in) all_same = false;
    }
    CHECK_FALSE(all_same);
    CHECK_THROWS(ot_two_star_schedule(7));
    CHECK_THROWS(ot_two_star_schedule(4));
}

TEST_CASE("empirical rate on a noise-floor trajectory returns zero") {
    GraphSchedule sched = constant_schedule(make_family(Family::complete, 6));
    Rng rng(3);
    Trajectory traj =
        simulate(sched, Rule::equal_neighbor, RuleParams{}, rng.centered_vector(6), 5000);
    CHECK(traj.converged);  // complete graph hits consensus in one step
    CHECK(traj.rho_hat == doctest::Approx(0.0));
}

TEST_CASE("per-step contraction check matches the gram spectrum") {
    DirectedGraph ring = make_family(Family::ring, 11);
    GraphSchedule sched = constant_schedule(ring);
    ContractionReport rep =
        contraction_check(sched, Rule::metropolis, RuleParams{}, 3, 200, 99);
    CHECK(rep.ok);
    Matrix met = metropolis(ring);
    PerronVector pi = perron(met);
    Matrix g = gram(met, pi);
    double allowed = reversible_spectrum(g, pi).lambda2;
    CHECK(rep.worst_allowed == doctest::Approx(allowed));
    CHECK(rep.worst_ratio <= allowed + 1e-9);
}

TEST_CASE("finite schedule stops at the last graph") {
    GraphSchedule sched;
    sched.period = 0;
    sched.kind = "custom";
    for (int i = 0; i < 3; ++i) sched.graphs.push_back(make_family(Family::ring, 5));
    Rng rng(8);
    Trajectory traj =
        simulate(sched, Rule::metropolis, RuleParams{}, rng.centered_vector(5), 50);
    CHECK(traj.steps <= 3);
}
