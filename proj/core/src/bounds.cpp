#include "consensus/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "consensus/tolerances.hpp"

namespace consensus {

double eta_bound(const Matrix& P, const PerronVector& pi) {
    double m = mu(P, pi);
    return 1.0 - 2.0 * m / (P.n - 1);
}

double analytic_gram_bound(const Matrix& A, const PerronVector& pi) {
    return 1.0 - min_weighted_entry(A, pi) / (A.n - 1);
}

double path_length_P(const Matrix& P, const PerronVector& pi, const std::vector<int>& path) {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        double w = pi.p[path[i]] * P(path[i], path[i + 1]);
        if (w <= 0.0)
            throw std::logic_error("path_length_P: path crosses a zero entry");
        len += 1.0 / w;
    }
    return len;
}

double kappa(const Matrix& P, const PerronVector& pi, const PathFamily& family) {
    if (!family.edge_disjoint)
        throw std::logic_error("kappa: needs an arc-disjoint path family");
    double worst = 0.0;
    for (int i = 0; i < family.n; ++i)
        for (int j = 0; j < family.n; ++j) {
            if (i == j) continue;
            double inv_sum = 0.0;
            for (const auto& path : family.at(i, j))
                inv_sum += 1.0 / path_length_P(P, pi, path);
            worst = std::max(worst, 1.0 / inv_sum);
        }
    return worst;
}

double kappa_bound(const Matrix& P, const PerronVector& pi, const PathFamily& family) {
    return 1.0 - 1.0 / kappa(P, pi, family);
}

double kappa_tilde(const Matrix& P, const PerronVector& pi, const PathFamily& family) {
    if (!family.geodesic)
        throw std::logic_error("kappa_tilde: needs a single-geodesic family");
    const int n = family.n;
    // load[u*n+v] accumulates |gamma_ij|_P pi_i pi_j over paths through (u,v).
    std::vector<double> load(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& path = family.at(i, j).front();
            double contrib = path_length_P(P, pi, path) * pi.p[i] * pi.p[j];
            for (std::size_t k = 0; k + 1 < path.size(); ++k)
                load[static_cast<size_t>(path[k]) * n + path[k + 1]] += contrib;
        }
    return *std::max_element(load.begin(), load.end());
}

double kappa_tilde_bound(const Matrix& P, const PerronVector& pi, const PathFamily& family) {
    return 1.0 - 1.0 / kappa_tilde(P, pi, family);
}

double beta_b(const Matrix& P, const PerronVector& pi, double delta_star) {
    return 1.0 - min_weighted_entry(P, pi) / delta_star;
}

double beta_ds(const Matrix& P, const PerronVector& pi, int diam, long long bottleneck) {
    double pmax = pi.max();
    return 1.0 - min_weighted_entry(P, pi) /
                     (pmax * pmax * static_cast<double>(diam) * static_cast<double>(bottleneck));
}

double metropolis_poincare_bound(long long bottleneck) {
    return 1.0 - 1.0 / (4.0 * static_cast<double>(bottleneck));
}

double quadratic_metropolis_bound(int n) { return 1.0 - 1.0 / (4.0 * n * static_cast<double>(n)); }
double quadratic_lazy_bound(int n) { return 1.0 - 1.0 / (8.0 * n * static_cast<double>(n)); }
double quadratic_en_bound(int n, int d_min, int d_max) {
    if (d_min > d_max) throw std::invalid_argument("quadratic_en_bound: d_min > d_max");
    return 1.0 - 1.0 / ((3.0 + d_max - d_min) * n * static_cast<double>(n));
}

RateBound reversible_rate_bound(const GraphSchedule& schedule, Rule rule,
                                const RuleParams& params) {
    RateBound rb;
    rb.a = 1.0;
    rb.theorem = 0.0;
    rb.kappa_sup = 0.0;
    rb.kappa_tilde_sup = 0.0;
    for (std::size_t t = 0; t < schedule.graphs.size(); ++t) {
        const DirectedGraph& g = schedule.graphs[t];
        if (!g.is_bidirectional() || !g.strongly_connected())
            throw std::runtime_error("reversible_rate_bound: step " + std::to_string(t) +
                                     " violates the bidirectional-connected assumption");
        Matrix A = build_rule(g, rule, params);
        PerronVector pi = perron(A);
        if (!is_reversible(A, pi, Tolerances::global().reversibility))
            throw std::runtime_error("reversible_rate_bound: step " + std::to_string(t) +
                                     " is not reversible");
        rb.a = std::min(rb.a, min_diagonal(A));
        auto nd = normalized_diameter(g);
        PathFamily disjoint = disjoint_path_family(g, nd.k);
        PathFamily geo = geodesic_family(g, GeodesicStrategy::congestion_reroute);
        rb.kappa_sup = std::max(rb.kappa_sup, kappa(A, pi, disjoint));
        rb.kappa_tilde_sup = std::max(rb.kappa_tilde_sup, kappa_tilde(A, pi, geo));
        rb.theorem = std::max(rb.theorem, second_singular(A, pi));
    }
    double kmin = std::min(rb.kappa_sup, rb.kappa_tilde_sup);
    rb.corollary = 1.0 - std::min(2.0 * rb.a, 1.0 / kmin);
    return rb;
}

SmallVariationBound small_variation_rate_bound(const GraphSchedule& schedule, Rule rule,
                                               const RuleParams& params) {
    SmallVariationBound sv;
    ScheduleInfima inf = schedule_infima(schedule, rule, params);
    sv.nu = inf.nu;
    double sup = 0.0;
    for (const auto& g : schedule.graphs) {
        Matrix A = build_rule(g, rule, params);
        PerronVector pi = perron(A);
        sup = std::max(sup, second_singular(A, pi));
    }
    sv.sigma2_sup = sup;
    sv.value = sv.nu * sup;
    sv.vacuous = sv.value >= 1.0;
    return sv;
}

namespace {

DirectedGraph support_graph(const Matrix& m, double threshold = 1e-14) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m(i, j) > threshold) arcs.emplace_back(j, i);  // matrix support is the
                                                               // reverse of the graph
    return DirectedGraph::from_arcs(m.n, std::move(arcs), false);
}

}  // namespace

BoundReport full_report(const DirectedGraph& g, const std::string& graph_id, Rule rule,
                        const RuleParams& params) {
    const auto& tol = Tolerances::global();
    BoundReport rep;
    rep.graph_id = graph_id;
    rep.rule = rule_name(rule);
    rep.n = g.n;

    Matrix A = build_rule(g, rule, params);
    PerronVector piA = perron(A);
    rep.sigma2 = second_singular(A, piA);

    // The spectral machinery applies to a reversible matrix: either A itself,
    // or its gram matrix when A is not reversible.
    Matrix P = A;
    PerronVector pi = piA;
    DirectedGraph support = g;
    bool reversible = is_reversible(A, piA, tol.reversibility);
    if (!reversible) {
        P = gram(A, piA);
        pi = piA;  // the gram matrix is reversible w.r.t. the same vector
        support = support_graph(P);
        rep.beta_a = analytic_gram_bound(A, piA);
        rep.notes = "non-reversible input: spectral bounds evaluated on the gram matrix; ";
    }
    Spectrum spec = reversible_spectrum(P, pi);
    rep.lambda2 = spec.lambda2;

    if (P.n <= 22) {
        rep.eta = eta_bound(P, pi);
        CheegerBracket cb = cheeger(P, pi);
        rep.cheeger_lo = cb.lower;
        rep.cheeger_hi = cb.upper;
    } else {
        rep.notes += "n > 22: eta and Cheeger enumeration skipped; ";
    }
    auto nd = normalized_diameter(support);
    rep.kappa = kappa_bound(P, pi, disjoint_path_family(support, nd.k));
    rep.kappa_tilde =
        kappa_tilde_bound(P, pi, geodesic_family(support, GeodesicStrategy::congestion_reroute));
    rep.beta_b = beta_b(P, pi, nd.value);
    rep.beta_ds = beta_ds(
        P, pi, diameter(support),
        bottleneck_measure(support, geodesic_family(support, GeodesicStrategy::congestion_reroute)));

    double best = 1.0;
    bool sound = true;
    auto consider = [&](const std::optional<double>& b) {
        if (!b) return;
        best = std::min(best, *b);
        if (*b < rep.lambda2 - tol.soundness) sound = false;
    };
    consider(rep.eta);
    consider(rep.kappa);
    consider(rep.kappa_tilde);
    consider(rep.beta_b);
    consider(rep.beta_ds);
    consider(rep.beta_a);
    consider(rep.cheeger_hi);
    if (rep.cheeger_lo && *rep.cheeger_lo > rep.lambda2 + tol.soundness) sound = false;
    rep.rate_bound = best;
    rep.sound = sound;
    return rep;
}

}  // namespace consensus
