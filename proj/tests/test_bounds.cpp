#include <doctest.h>

#include <cmath>

#include "consensus/bounds.hpp"
#include "consensus/rng.hpp"

using namespace consensus;

TEST_CASE("eta bound on the triangle") {
    DirectedGraph tri = make_family(Family::complete, 3);
    Matrix en = equal_neighbor(tri);
    PerronVector pi = perron(en);
    CHECK(eta_bound(en, pi) == doctest::Approx(7.0 / 9.0));  // 1 - 2 mu/(n-1), mu = 2/9
    CHECK(reversible_spectrum(en, pi).lambda2 <= eta_bound(en, pi) + 1e-12);
}

TEST_CASE("analytic gram bound") {
    Matrix k2 = metropolis(make_family(Family::complete, 2));
    PerronVector pi = perron(k2);
    CHECK(analytic_gram_bound(k2, pi) == doctest::Approx(0.75));
    CHECK(reversible_spectrum(gram(k2, pi), pi).lambda2 <=
          analytic_gram_bound(k2, pi) + 1e-12);

    for (int m = 3; m <= 7; ++m) {
        DirectedGraph bf = make_family(Family::butterfly, m);
        Matrix b = equal_neighbor(bf);
        PerronVector bpi = perron(b);
        double expect = 1.0 - 1.0 / (5.0 * (2 * m - 1) * std::pow(2.0, m - 1));
        CHECK(analytic_gram_bound(b, bpi) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(reversible_spectrum(gram(b, bpi), bpi).lambda2 <= expect + 1e-9);
    }
}

TEST_CASE("kappa bounds: ring disjoint paths vs beta_b") {
    DirectedGraph ring5 = make_family(Family::ring, 5);
    Matrix en = equal_neighbor(ring5);
    PerronVector pi = perron(en);
    PathFamily two = disjoint_path_family(ring5, 2);
    double kb = kappa_bound(en, pi, two);
    double bb = beta_b(en, pi, normalized_diameter(ring5).value);
    CHECK(kb <= bb + 1e-12);
    CHECK(reversible_spectrum(en, pi).lambda2 <= kb + 1e-9);
    // Single-geodesic family: kappa <= (n-1)/alpha.
    PathFamily geo = geodesic_family(ring5, GeodesicStrategy::bfs_lex);
    PathFamily single;
    single.n = 5;
    single.edge_disjoint = true;  // one geodesic per pair is trivially disjoint
    single.paths = geo.paths;
    CHECK(kappa(en, pi, single) <= 4.0 / min_weighted_entry(en, pi) + 1e-9);
}

TEST_CASE("kappa_tilde on the star under Metropolis") {
    int n = 12;
    DirectedGraph star = make_family(Family::star, n);
    Matrix met = metropolis(star);
    PerronVector pi = perron(met);
    PathFamily geo = geodesic_family(star, GeodesicStrategy::congestion_reroute);
    CHECK(kappa_tilde(met, pi, geo) == doctest::Approx(2.0 * n - 3.0));
}

TEST_CASE("beta bounds leading orders") {
    int n = 101;  // ring, m = 50
    DirectedGraph ring = make_family(Family::ring, n);
    Matrix en = equal_neighbor(ring);
    PerronVector pi = perron(en);
    FamilyMetrics fm = family_metrics(Family::ring, n);
    double bb = beta_b(en, pi, fm.delta_star);
    double bds = beta_ds(en, pi, fm.diam, fm.bottleneck);
    CHECK(1.0 - bb == doctest::Approx(2.0 / (3.0 * n * n)).epsilon(0.05));
    CHECK(1.0 - bds == doctest::Approx(16.0 / (3.0 * n * n)).epsilon(0.05));
    CHECK(bds < bb);

    DirectedGraph ts = make_family(Family::two_star, 64);
    Matrix tsen = equal_neighbor(ts);
    PerronVector tspi = perron(tsen);
    FamilyMetrics tsm = family_metrics(Family::two_star, 64);
    CHECK(1.0 - beta_b(tsen, tspi, tsm.delta_star) ==
          doctest::Approx(1.0 / (9.0 * 64.0)).epsilon(0.07));
}

TEST_CASE("metropolis poincare route on the barbell") {
    FamilyMetrics fm = family_metrics(Family::barbell, 5);
    double p = 5.0;
    CHECK(metropolis_poincare_bound(fm.bottleneck) <= 1.0 - 1.0 / (16.0 * p * p) + 1e-12);
}

TEST_CASE("quadratic closed forms") {
    CHECK(quadratic_metropolis_bound(10) == doctest::Approx(1.0 - 1.0 / 400.0));
    CHECK(quadratic_lazy_bound(10) == doctest::Approx(1.0 - 1.0 / 800.0));
    CHECK(quadratic_en_bound(10, 3, 3) == doctest::Approx(1.0 - 1.0 / 300.0));
}

TEST_CASE("reversible rate bound on schedules") {
    DirectedGraph ring7 = make_family(Family::ring, 7);
    RateBound single =
        reversible_rate_bound(constant_schedule(ring7), Rule::metropolis, RuleParams{});
    Matrix met = metropolis(ring7);
    PerronVector pi = perron(met);
    CHECK(single.theorem == doctest::Approx(second_singular(met, pi)));
    CHECK(single.corollary < 1.0);
    CHECK(second_singular(met, pi) <= single.corollary + 1e-9);
}

TEST_CASE("small variation bound") {
    DirectedGraph grid = make_family(Family::grid, 3);
    SmallVariationBound sv =
        small_variation_rate_bound(constant_schedule(grid), Rule::metropolis, RuleParams{});
    CHECK(sv.nu == doctest::Approx(1.0));
    CHECK_FALSE(sv.vacuous);
    CHECK(sv.value == doctest::Approx(sv.sigma2_sup));
}

TEST_CASE("full report orderings match the tabulated regimes") {
    DirectedGraph ring21 = make_family(Family::ring, 21);
    BoundReport ring = full_report(ring21, "ring-21", Rule::equal_neighbor, RuleParams{});
    REQUIRE(ring.beta_b);
    REQUIRE(ring.beta_ds);
    CHECK(*ring.beta_ds < *ring.beta_b);
    CHECK(ring.sound);

    BoundReport star =
        full_report(make_family(Family::star, 50), "star-50", Rule::equal_neighbor, RuleParams{});
    REQUIRE(star.beta_b);
    REQUIRE(star.beta_ds);
    CHECK(*star.beta_b < *star.beta_ds);
    CHECK(star.sound);

    BoundReport cube = full_report(make_family(Family::hypercube, 4), "hypercube-4",
                                   Rule::metropolis, RuleParams{});
    REQUIRE(cube.beta_b);
    REQUIRE(cube.beta_ds);
    CHECK(*cube.beta_ds < *cube.beta_b);
    CHECK(cube.sound);

    BoundReport bf = full_report(make_family(Family::butterfly, 5), "butterfly-5",
                                 Rule::equal_neighbor, RuleParams{});
    REQUIRE(bf.beta_a);
    REQUIRE(bf.beta_b);
    REQUIRE(bf.beta_ds);
    REQUIRE(bf.cheeger_lo);
    REQUIRE(bf.cheeger_hi);
    CHECK(bf.sound);
}
