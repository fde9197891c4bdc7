#pragma once

#include <vector>

#include "consensus/matrix.hpp"

namespace consensus {

// Geometry of the pi-weighted inner product <x,y>_pi = sum_i pi_i x_i y_i.
struct PiGeometry {
    std::vector<double> pi;

    explicit PiGeometry(std::vector<double> weights) : pi(std::move(weights)) {}
    explicit PiGeometry(const PerronVector& p) : pi(p.p) {}

    double dot(const std::vector<double>& x, const std::vector<double>& y) const;
    double norm(const std::vector<double>& x) const;
    double mean(const std::vector<double>& x) const;  // <x, 1>_pi
    // Projection onto the pi-orthogonal complement of span(1).
    std::vector<double> project(const std::vector<double>& x) const;
};

// max_i x_i - min_i x_i. Throws on an empty vector.
double seminorm_N(const std::vector<double>& x);

// Q_P(x) = <x, x - Px>_pi. For reversible P equals the Green-formula double
// sum (1/2) sum_ij pi_i P_ij (x_i - x_j)^2.
double quadratic_form(const Matrix& P, const PiGeometry& geo, const std::vector<double>& x);

// The explicit double sum above, for cross-checking the inner-product form.
double green_double_sum(const Matrix& P, const PiGeometry& geo, const std::vector<double>& x);

struct Spectrum {
    std::vector<double> eigenvalues;  // sorted descending
    double lambda2 = 0.0;
    double lambda_n = 0.0;
    double achieved_offdiag = 0.0;  // off-diagonal Frobenius norm at exit
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations (row-major
// upper-triangle order), to off-diagonal Frobenius norm <= tolerance, at most
// 100 sweeps. Deterministic.
Spectrum jacobi_eigenvalues(Matrix S);

// Spectrum of a reversible P: symmetrize S = D^{1/2} P D^{-1/2} (similar to P
// by detailed balance) and run Jacobi. Throws if P is not reversible within
// the configured tolerance.
Spectrum reversible_spectrum(const Matrix& P, const PerronVector& pi);

// sqrt(lambda2(P^dag P)); the per-step contraction factor of the variance.
double second_singular(const Matrix& P, const PerronVector& pi);

// Exact min over proper nonempty subsets S of sum_{i in S, j notin S} pi_i P_ij.
// Gray-code enumeration; requires n <= 22.
double mu(const Matrix& P, const PerronVector& pi);

// Cut value of one specific subset (used for pinned half-split checks).
double subset_cut(const Matrix& P, const PerronVector& pi, const std::vector<int>& subset);

struct CheegerBracket {
    double h = 0.0;      // Cheeger constant over subsets with pi(S) <= 1/2
    double lower = 0.0;  // 1 - 2h  <= lambda2
    double upper = 1.0;  // lambda2 <= 1 - h^2/2
};

// Exact Cheeger constant by subset enumeration; requires n <= 22.
CheegerBracket cheeger(const Matrix& P, const PerronVector& pi);

// -1 + 2 min_i P_ii; lower bound on lambda_n for reversible P.
double gershgorin_floor(const Matrix& P);

}  // namespace consensus
