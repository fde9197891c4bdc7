#include "consensus/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "consensus/tolerances.hpp"

namespace consensus {

double PiGeometry::dot(const std::vector<double>& x, const std::vector<double>& y) const {
    double s = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) s += pi[i] * x[i] * y[i];
    return s;
}

double PiGeometry::norm(const std::vector<double>& x) const { return std::sqrt(dot(x, x)); }

double PiGeometry::mean(const std::vector<double>& x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) s += pi[i] * x[i];
    return s;
}

std::vector<double> PiGeometry::project(const std::vector<double>& x) const {
    double m = mean(x);
    std::vector<double> y(x);
    for (double& v : y) v -= m;
    return y;
}

double seminorm_N(const std::vector<double>& x) {
    if (x.empty()) throw std::invalid_argument("seminorm_N: empty vector");
    auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    return *hi - *lo;
}

double quadratic_form(const Matrix& P, const PiGeometry& geo, const std::vector<double>& x) {
    std::vector<double> px = P.apply(x);
    double s = 0.0;
    for (int i = 0; i < P.n; ++i) s += geo.pi[i] * x[i] * (x[i] - px[i]);
    return s;
}

double green_double_sum(const Matrix& P, const PiGeometry& geo, const std::vector<double>& x) {
    double s = 0.0;
    for (int i = 0; i < P.n; ++i)
        for (int j = 0; j < P.n; ++j) {
            double d = x[i] - x[j];
            s += geo.pi[i] * P(i, j) * d * d;
        }
    return 0.5 * s;
}

Spectrum jacobi_eigenvalues(Matrix S) {
    const int n = S.n;
    const double tol = Tolerances::global().jacobi_offdiag;
    auto offdiag = [&S, n]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * S(i, j) * S(i, j);
        return std::sqrt(s);
    };
    double off = offdiag();
    for (int sweep = 0; sweep < 100 && off > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = S(p, q);
                if (std::abs(apq) < tol / (n * n)) continue;
                double theta = (S(q, q) - S(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double skp = S(k, p), skq = S(k, q);
                    S(k, p) = c * skp - s * skq;
                    S(k, q) = s * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    double spk = S(p, k), sqk = S(q, k);
                    S(p, k) = c * spk - s * sqk;
                    S(q, k) = s * spk + c * sqk;
                }
            }
        off = offdiag();
    }
    Spectrum spec;
    spec.achieved_offdiag = off;
    spec.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) spec.eigenvalues[i] = S(i, i);
    std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(), std::greater<>());
    spec.lambda2 = (n > 1) ? spec.eigenvalues[1] : spec.eigenvalues[0];
    spec.lambda_n = spec.eigenvalues.back();
    return spec;
}

Spectrum reversible_spectrum(const Matrix& P, const PerronVector& pi) {
    const auto& tol = Tolerances::global();
    if (!is_reversible(P, pi, tol.reversibility))
        throw std::runtime_error(
            "reversible_spectrum: matrix is not reversible; use the gram matrix instead");
    const int n = P.n;
    Matrix S(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            S(i, j) = std::sqrt(pi.p[i] / pi.p[j]) * P(i, j);
    // Enforce exact symmetry (detailed balance holds to rounding only).
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = 0.5 * (S(i, j) + S(j, i));
            S(i, j) = S(j, i) = v;
        }
    return jacobi_eigenvalues(std::move(S));
}

double second_singular(const Matrix& P, const PerronVector& pi) {
    Matrix G = gram(P, pi);
    Spectrum s = reversible_spectrum(G, pi);
    return std::sqrt(std::max(0.0, s.lambda2));
}

namespace {

// Gray-code walk over proper nonempty subsets, maintaining the cut value
// cut(S) = sum_{i in S, j notin S} w_ij and the mass pi(S) incrementally.
// Calls visit(cut, mass) for every proper nonempty subset.
template <typename Visit>
void enumerate_cuts(const Matrix& P, const PerronVector& pi, Visit visit) {
    const int n = P.n;
    if (n > 22) throw std::invalid_argument("subset enumeration limited to n <= 22");
    const std::uint32_t total = 1u << n;
    std::uint32_t mask = 0;
    double cut = 0.0, mass = 0.0;
    for (std::uint32_t i = 1; i < total; ++i) {
        int k = std::countr_zero(i);
        bool entering = !(mask >> k & 1u);
        // Flipping node k: arcs k->outside join/leave the cut, arcs inside->k
        // leave/join it.
        double delta = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            bool in_s = (mask >> j & 1u);
            if (entering) {
                if (!in_s) delta += pi.p[k] * P(k, j);
                else delta -= pi.p[j] * P(j, k);
            } else {
                if (!in_s) delta -= pi.p[k] * P(k, j);
                else delta += pi.p[j] * P(j, k);
            }
        }
        cut += delta;
        mass += entering ? pi.p[k] : -pi.p[k];
        mask ^= 1u << k;
        if (mask != 0 && mask != total - 1) visit(cut, mass);
    }
}

}  // namespace

double mu(const Matrix& P, const PerronVector& pi) {
    double best = std::numeric_limits<double>::infinity();
    enumerate_cuts(P, pi, [&best](double cut, double) { best = std::min(best, cut); });
    return best;
}

double subset_cut(const Matrix& P, const PerronVector& pi, const std::vector<int>& subset) {
    std::vector<char> in(P.n, 0);
    for (int v : subset) in.at(v) = 1;
    double cut = 0.0;
    for (int i = 0; i < P.n; ++i) {
        if (!in[i]) continue;
        for (int j = 0; j < P.n; ++j)
            if (!in[j]) cut += pi.p[i] * P(i, j);
    }
    return cut;
}

CheegerBracket cheeger(const Matrix& P, const PerronVector& pi) {
    double h = std::numeric_limits<double>::infinity();
    enumerate_cuts(P, pi, [&h](double cut, double mass) {
        if (mass <= 0.5 + 1e-12) h = std::min(h, cut / mass);
    });
    CheegerBracket b;
    b.h = h;
    b.lower = 1.0 - 2.0 * h;
    b.upper = 1.0 - h * h / 2.0;
    return b;
}

double gershgorin_floor(const Matrix& P) {
    double mind = std::numeric_limits<double>::infinity();
    for (int i = 0; i < P.n; ++i) mind = std::min(mind, P(i, i));
    return -1.0 + 2.0 * mind;
}

}  // namespace consensus
