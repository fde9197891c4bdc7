#pragma once

#include <string>
#include <vector>

#include "consensus/graph.hpp"

namespace consensus {

// Dense row-major square matrix. Scale is desk-sized (n up to ~2048), so no
// sparse storage.
struct Matrix {
    int n = 0;
    std::vector<double> a;

    Matrix() = default;
    explicit Matrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static Matrix identity(int n);
    std::vector<double> apply(const std::vector<double>& x) const;  // A x
    Matrix times(const Matrix& other) const;                        // A * other
    Matrix transposed() const;
    double max_row_sum_error() const;  // max_i |sum_j a_ij - 1|
    bool is_stochastic(double tol) const;
};

enum class Rule { metropolis, lazy_metropolis, equal_neighbor, fixed_weight };

Rule rule_from_name(const std::string& name);
std::string rule_name(Rule r);

struct RuleParams {
    std::vector<int> q;  // fixed_weight caps; empty for other rules
};

// --- weight rules -------------------------------------------------------------

// M_ij = 1/max(d_i, d_j) on bidirectional links, diagonal fills the row.
// Symmetric, hence doubly stochastic. Throws on non-bidirectional input.
Matrix metropolis(const DirectedGraph& g);

// L_ij = 1/(2 max(d_i - 1, d_j - 1)); diagonal >= 1/2. Bidirectional only.
Matrix lazy_metropolis(const DirectedGraph& g);

// Row i constant 1/d_i on the in-neighborhood (self included).
Matrix equal_neighbor(const DirectedGraph& g);

// W_ij = 1/q_i on in-neighbors j != i, W_ii = 1 - (d_i - 1)/q_i.
// Requires q_i >= d_i so the diagonal stays positive.
Matrix fixed_weight(const DirectedGraph& g, const std::vector<int>& q);

Matrix build_rule(const DirectedGraph& g, Rule rule, const RuleParams& params);

// --- Perron vectors and adjoints ----------------------------------------------

struct PerronVector {
    std::vector<double> p;  // positive entries summing to 1
    double residual = 0.0;  // achieved ||P^T pi - pi||_inf

    double max() const;
    double min() const;
};

// Solves pi^T P = pi^T, sum pi = 1 by a dense partial-pivoting solve of
// (P^T - I) with the last equation replaced by the normalization. Throws
// std::runtime_error if the matrix is reducible (non-positive entries appear)
// or the residual exceeds the configured tolerance.
PerronVector perron(const Matrix& P);

// P adjoint with respect to the pi-weighted inner product:
// (P^dag)_ij = pi_j P_ji / pi_i. Row-stochastic when pi is P's Perron vector.
Matrix adjoint(const Matrix& P, const PerronVector& pi);

// P^dag P using P's own Perron vector. Stochastic, reversible w.r.t. the same
// pi, with nonnegative spectrum.
Matrix gram(const Matrix& P, const PerronVector& pi);

// max_ij |pi_i P_ij - pi_j P_ji| <= tol  (detailed balance).
bool is_reversible(const Matrix& P, const PerronVector& pi, double tol);

// min over supported non-self-loop entries of pi_i P_ij.
double min_weighted_entry(const Matrix& P, const PerronVector& pi);

// min over diagonal entries.
double min_diagonal(const Matrix& P);

struct ScheduleInfima {
    double a = 1.0;      // inf over steps/nodes of the diagonal
    double alpha = 1.0;  // inf over steps/supported arcs of pi_i A_ij
    double nu = 1.0;     // sup over steps/nodes of sqrt(pi_i(t+1)/pi_i(t))
};

// Evaluates a, alpha over every distinct step of the schedule, and nu across
// consecutive Perron vectors (cyclically for periodic schedules; 1 when the
// Perron vector is constant). Throws if any step misses a self-loop.
ScheduleInfima schedule_infima(const GraphSchedule& schedule, Rule rule,
                               const RuleParams& params);

}  // namespace consensus
