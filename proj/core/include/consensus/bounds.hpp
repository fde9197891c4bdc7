#pragma once

#include <optional>
#include <string>

#include "consensus/graph.hpp"
#include "consensus/matrix.hpp"
#include "consensus/spectral.hpp"

namespace consensus {

// --- single-matrix upper bounds on lambda2 -------------------------------------
// Each returns an upper bound B with lambda2(P) <= B for reversible P.

// 1 - 1/eta with eta = (n-1)/(2 mu(P)). Needs exact mu, so n <= 22.
double eta_bound(const Matrix& P, const PerronVector& pi);

// lambda2(A^dag A) <= 1 - alpha(A)/(n-1); valid even for non-reversible A.
double analytic_gram_bound(const Matrix& A, const PerronVector& pi);

// P-length of a path: sum over arcs of 1/(pi_u P_uv).
double path_length_P(const Matrix& P, const PerronVector& pi, const std::vector<int>& path);

// kappa(P) over an arc-disjoint path family:
// max_{i != j} ( sum_{gamma in Gamma_ij} 1/|gamma|_P )^{-1}.
double kappa(const Matrix& P, const PerronVector& pi, const PathFamily& family);

// Bound 1 - 1/kappa(P).
double kappa_bound(const Matrix& P, const PerronVector& pi, const PathFamily& family);

// kappa~(P) over a single-geodesic family:
// max_arc sum_{(i,j): arc in gamma_ij} |gamma_ij|_P pi_i pi_j.
double kappa_tilde(const Matrix& P, const PerronVector& pi, const PathFamily& family);

// Bound 1 - 1/kappa~(P).
double kappa_tilde_bound(const Matrix& P, const PerronVector& pi, const PathFamily& family);

// beta_b = 1 - alpha(P)/delta*  (delta* is the normalized-diameter estimate).
double beta_b(const Matrix& P, const PerronVector& pi, double delta_star);

// beta_DS = 1 - alpha(P)/(pi_max^2 * diameter * bottleneck).
double beta_ds(const Matrix& P, const PerronVector& pi, int diam, long long bottleneck);

// Metropolis-only Poincare route: kappa~(M) <= 4 b(G) on a bidirectional
// graph (path P-lengths telescope through the geodesic degree-sum limit 4n),
// giving lambda2 <= 1 - 1/(4b).
double metropolis_poincare_bound(long long bottleneck);

// --- closed-form worst-case rates ----------------------------------------------

double quadratic_metropolis_bound(int n);                       // 1 - 1/(4 n^2)
double quadratic_lazy_bound(int n);                             // 1 - 1/(8 n^2)
double quadratic_en_bound(int n, int d_min, int d_max);         // 1 - 1/((3+dmax-dmin) n^2)

// --- schedule-level rate bounds --------------------------------------------------

struct RateBound {
    double corollary = 1.0;   // 1 - min(2a, 1/min(kappa, kappa~)), sup over steps
    double theorem = 1.0;     // sup_t sigma2(A(t))
    double a = 0.0;
    double kappa_sup = 0.0;
    double kappa_tilde_sup = 0.0;
};

// Evaluates the reversible-schedule rate bound over every distinct step.
// Every step must be bidirectional (reversibility of the three supported
// rules on bidirectional graphs) and strongly connected.
RateBound reversible_rate_bound(const GraphSchedule& schedule, Rule rule,
                                const RuleParams& params);

struct SmallVariationBound {
    double value = 1.0;  // nu * sup_t sigma2(A(t))
    double nu = 1.0;
    double sigma2_sup = 0.0;
    bool vacuous = false;  // value >= 1
};

// Time-varying-Perron bound: nu * sup sigma2; flagged vacuous when >= 1.
SmallVariationBound small_variation_rate_bound(const GraphSchedule& schedule, Rule rule,
                                               const RuleParams& params);

// --- aggregated report ------------------------------------------------------------

struct BoundReport {
    std::string graph_id;
    std::string rule;
    int n = 0;
    double lambda2 = 0.0;  // exact lambda2 of P (reversible) or of gram(P)
    double sigma2 = 0.0;   // sqrt(lambda2(P^dag P))
    std::optional<double> eta;
    std::optional<double> kappa;        // bound 1 - 1/kappa
    std::optional<double> kappa_tilde;  // bound 1 - 1/kappa~
    std::optional<double> beta_b;
    std::optional<double> beta_ds;
    std::optional<double> beta_a;  // analytic gram bound (non-reversible path)
    std::optional<double> cheeger_lo;
    std::optional<double> cheeger_hi;
    double rate_bound = 1.0;  // min of applicable upper bounds
    bool sound = false;       // every present upper bound >= lambda2 - tol
    std::string notes;        // reasons for absent bounds
};

// All applicable bounds for one graph/rule pair, with exact spectra and
// soundness flags. For a non-reversible matrix the spectral bounds are
// evaluated on the gram matrix and beta_a is reported.
BoundReport full_report(const DirectedGraph& g, const std::string& graph_id, Rule rule,
                        const RuleParams& params);

}  // namespace consensus
