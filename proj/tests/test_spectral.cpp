#include <doctest.h>

#include <cmath>
#include <numbers>

#include "consensus/graph.hpp"
#include "consensus/matrix.hpp"
#include "consensus/rng.hpp"
#include "consensus/spectral.hpp"

using namespace consensus;

TEST_CASE("seminorm and pi geometry") {
    CHECK(seminorm_N({2.0, 2.0, 2.0}) == doctest::Approx(0.0));
    CHECK(seminorm_N({0.0, 1.0}) == doctest::Approx(1.0));

    PiGeometry geo(std::vector<double>{0.25, 0.25, 0.5});
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> x = geo.project(rng.centered_vector(3));
        CHECK(std::abs(geo.mean(x)) <= 1e-12);
        CHECK(seminorm_N(x) >= std::sqrt(2.0) * geo.norm(x) - 1e-12);
    }
}

TEST_CASE("quadratic form and Green double sum") {
    DirectedGraph barbell = make_family(Family::barbell, 3);
    Matrix en = equal_neighbor(barbell);
    PerronVector pi = perron(en);
    PiGeometry geo(pi);

    CHECK(quadratic_form(en, geo, std::vector<double>(barbell.n, 1.0)) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // The Landau-Odlyzko test vector: -p on one clique, the line counts up,
    // +p on the other clique. Q(v) evaluates to 2p/|E| (edge sum done by hand:
    // 2p unit steps along the line, each weighted 1/|E| per direction).
    int p = 3, n = barbell.n;
    std::vector<double> v(n);
    for (int i = 0; i < p; ++i) v[i] = -p;                    // clique C-bar
    for (int i = 0; i < 2 * p - 1; ++i) v[p + i] = i - (p - 1);  // line 1-p .. p-1
    for (int i = 3 * p - 1; i < n; ++i) v[i] = p;             // clique C
    double q = quadratic_form(en, geo, v);
    CHECK(q == doctest::Approx(green_double_sum(en, geo, v)).epsilon(1e-12));
    CHECK(q == doctest::Approx(2.0 * p / static_cast<double>(barbell.num_arcs())));
}

TEST_CASE("jacobi eigenvalues on a known symmetric matrix") {
    Matrix s(3);
    s(0, 0) = 2;
    s(1, 1) = 2;
    s(2, 2) = 2;
    s(0, 1) = s(1, 0) = -1;
    s(1, 2) = s(2, 1) = -1;
    // Path-graph Laplacian: eigenvalues 2 +- sqrt(2), 2.
    Spectrum spec = jacobi_eigenvalues(s);
    CHECK(spec.eigenvalues[0] == doctest::Approx(2.0 + std::sqrt(2.0)));
    CHECK(spec.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(spec.eigenvalues[2] == doctest::Approx(2.0 - std::sqrt(2.0)));
    CHECK(spec.achieved_offdiag <= 1e-12);
}

TEST_CASE("reversible spectrum: ring circulant and complete pair") {
    DirectedGraph ring5 = make_family(Family::ring, 5);
    Spectrum spec = reversible_spectrum(equal_neighbor(ring5), perron(equal_neighbor(ring5)));
    double expect = (1.0 + 2.0 * std::cos(2.0 * std::numbers::pi / 5.0)) / 3.0;
    CHECK(spec.lambda2 == doctest::Approx(expect).epsilon(1e-12));

    Matrix k2 = metropolis(make_family(Family::complete, 2));
    Spectrum pair = reversible_spectrum(k2, perron(k2));
    CHECK(pair.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(pair.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("barbell spectral gap is cubic") {
    DirectedGraph barbell = make_family(Family::barbell, 3);
    Matrix en = equal_neighbor(barbell);
    double l2 = reversible_spectrum(en, perron(en)).lambda2;
    double scaled = (1.0 - l2) * std::pow(barbell.n, 3);
    CHECK(scaled >= 1.0);
    CHECK(scaled <= 80.0);
}

TEST_CASE("second singular value matches the reversible identity") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        DirectedGraph g = random_connected_graph(rng.uniform_int(3, 10), 2, rng);
        Matrix p = metropolis(g);
        PerronVector pi = perron(p);
        Spectrum spec = reversible_spectrum(p, pi);
        double expect = std::max(std::abs(spec.lambda_n), std::abs(spec.lambda2));
        CHECK(second_singular(p, pi) == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("mu and cheeger on the triangle") {
    DirectedGraph tri = make_family(Family::complete, 3);
    Matrix en = equal_neighbor(tri);
    PerronVector pi = perron(en);
    CHECK(mu(en, pi) == doctest::Approx(2.0 / 9.0));
    CheegerBracket cb = cheeger(en, pi);
    CHECK(cb.h == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("cheeger bracket and mu <= h/2 on random graphs") {
    Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        DirectedGraph g = random_connected_graph(rng.uniform_int(4, 10), 2, rng);
        Matrix p = equal_neighbor(g);
        PerronVector pi = perron(p);
        double l2 = reversible_spectrum(p, pi).lambda2;
        CheegerBracket cb = cheeger(p, pi);
        CHECK(cb.lower <= l2 + 1e-9);
        CHECK(l2 <= cb.upper + 1e-9);
        CHECK(mu(p, pi) <= cb.h / 2.0 + 1e-12);
    }
}

TEST_CASE("gershgorin floor") {
    CHECK(gershgorin_floor(Matrix::identity(4)) == doctest::Approx(1.0));
    CHECK(gershgorin_floor(lazy_metropolis(make_family(Family::grid, 3))) >= 0.0);
    DirectedGraph ring9 = make_family(Family::ring, 9);
    Matrix en = equal_neighbor(ring9);
    double floor = gershgorin_floor(en);
    CHECK(floor == doctest::Approx(-1.0 / 3.0));
    CHECK(reversible_spectrum(en, perron(en)).lambda_n >= floor - 1e-12);
}
