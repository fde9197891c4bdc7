#include "consensus/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "consensus/tolerances.hpp"

namespace consensus {

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> Matrix::apply(const std::vector<double>& x) const {
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        const double* row = &a[static_cast<size_t>(i) * n];
        for (int j = 0; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

Matrix Matrix::times(const Matrix& other) const {
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double v = (*this)(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < n; ++j) r(i, j) += v * other(k, j);
        }
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(j, i) = (*this)(i, j);
    return r;
}

double Matrix::max_row_sum_error() const {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += (*this)(i, j);
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

bool Matrix::is_stochastic(double tol) const {
    for (double v : a)
        if (v < -tol) return false;
    return max_row_sum_error() <= tol;
}

Rule rule_from_name(const std::string& name) {
    if (name == "metropolis") return Rule::metropolis;
    if (name == "lazy_metropolis" || name == "lazy") return Rule::lazy_metropolis;
    if (name == "equal_neighbor" || name == "equal-neighbor") return Rule::equal_neighbor;
    if (name == "fixed_weight" || name == "fixed-weight") return Rule::fixed_weight;
    throw std::invalid_argument("unknown rule: " + name);
}

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::metropolis: return "metropolis";
        case Rule::lazy_metropolis: return "lazy_metropolis";
        case Rule::equal_neighbor: return "equal_neighbor";
        case Rule::fixed_weight: return "fixed_weight";
    }
    return "?";
}

namespace {

void require_bidirectional(const DirectedGraph& g, const char* rule) {
    if (!g.is_bidirectional())
        throw std::invalid_argument(std::string(rule) + ": graph must be bidirectional");
    if (!g.has_all_self_loops())
        throw std::invalid_argument(std::string(rule) + ": every node needs a self-loop");
}

}  // namespace

Matrix metropolis(const DirectedGraph& g) {
    require_bidirectional(g, "metropolis");
    Matrix m(g.n);
    for (int i = 0; i < g.n; ++i) {
        double off = 0.0;
        for (int j : g.in[i]) {
            if (j == i) continue;
            double w = 1.0 / std::max(g.degree(i), g.degree(j));
            m(i, j) = w;
            off += w;
        }
        m(i, i) = 1.0 - off;
    }
    return m;
}

Matrix lazy_metropolis(const DirectedGraph& g) {
    require_bidirectional(g, "lazy_metropolis");
    if (g.n < 2) throw std::invalid_argument("lazy_metropolis: needs n >= 2");
    Matrix m(g.n);
    for (int i = 0; i < g.n; ++i) {
        double off = 0.0;
        for (int j : g.in[i]) {
            if (j == i) continue;
            double w = 1.0 / (2.0 * std::max(g.degree(i) - 1, g.degree(j) - 1));
            m(i, j) = w;
            off += w;
        }
        m(i, i) = 1.0 - off;
    }
    return m;
}

Matrix equal_neighbor(const DirectedGraph& g) {
    if (!g.has_all_self_loops())
        throw std::invalid_argument("equal_neighbor: every node needs a self-loop");
    Matrix m(g.n);
    for (int i = 0; i < g.n; ++i) {
        double w = 1.0 / g.degree(i);
        for (int j : g.in[i]) m(i, j) = w;
    }
    return m;
}

Matrix fixed_weight(const DirectedGraph& g, const std::vector<int>& q) {
    if (!g.has_all_self_loops())
        throw std::invalid_argument("fixed_weight: every node needs a self-loop");
    if (static_cast<int>(q.size()) != g.n)
        throw std::invalid_argument("fixed_weight: q must have one entry per node");
    Matrix m(g.n);
    for (int i = 0; i < g.n; ++i) {
        if (q[i] < g.degree(i))
            throw std::invalid_argument("fixed_weight: q_i >= d_i required (positive diagonal)");
        for (int j : g.in[i])
            if (j != i) m(i, j) = 1.0 / q[i];
        m(i, i) = 1.0 - static_cast<double>(g.degree(i) - 1) / q[i];
    }
    return m;
}

Matrix build_rule(const DirectedGraph& g, Rule rule, const RuleParams& params) {
    switch (rule) {
        case Rule::metropolis: return metropolis(g);
        case Rule::lazy_metropolis: return lazy_metropolis(g);
        case Rule::equal_neighbor: return equal_neighbor(g);
        case Rule::fixed_weight: {
            if (!params.q.empty()) return fixed_weight(g, params.q);
            // Default caps: the uniform in-degree bound d_max.
            std::vector<int> q(g.n, g.max_degree());
            return fixed_weight(g, q);
        }
    }
    throw std::invalid_argument("unknown rule");
}

double PerronVector::max() const { return *std::max_element(p.begin(), p.end()); }
double PerronVector::min() const { return *std::min_element(p.begin(), p.end()); }

PerronVector perron(const Matrix& P) {
    const int n = P.n;
    const auto& tol = Tolerances::global();
    // Solve (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1,
    // via Gaussian elimination with partial pivoting.
    std::vector<double> m(static_cast<size_t>(n) * (n + 1), 0.0);
    auto at = [&m, n](int i, int j) -> double& { return m[static_cast<size_t>(i) * (n + 1) + j]; };
    for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = P(j, i) - (i == j ? 1.0 : 0.0);
        at(i, n) = 0.0;
    }
    for (int j = 0; j < n; ++j) at(n - 1, j) = 1.0;
    at(n - 1, n) = 1.0;

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
        if (std::abs(at(pivot, col)) < 1e-300)
            throw std::runtime_error("perron: singular system (matrix reducible?)");
        if (pivot != col)
            for (int j = col; j <= n; ++j) std::swap(at(pivot, j), at(col, j));
        for (int r = col + 1; r < n; ++r) {
            double f = at(r, col) / at(col, col);
            if (f == 0.0) continue;
            for (int j = col; j <= n; ++j) at(r, j) -= f * at(col, j);
        }
    }
    PerronVector pv;
    pv.p.assign(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = at(i, n);
        for (int j = i + 1; j < n; ++j) s -= at(i, j) * pv.p[j];
        pv.p[i] = s / at(i, i);
    }
    for (double v : pv.p)
        if (!(v > 0.0))
            throw std::runtime_error("perron: non-positive entry (matrix reducible?)");
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += P(j, i) * pv.p[j];
        res = std::max(res, std::abs(s - pv.p[i]));
    }
    pv.residual = res;
    if (res > tol.perron_residual)
        throw std::runtime_error("perron: residual " + std::to_string(res) +
                                 " exceeds tolerance");
    return pv;
}

Matrix adjoint(const Matrix& P, const PerronVector& pi) {
    Matrix r(P.n);
    for (int i = 0; i < P.n; ++i)
        for (int j = 0; j < P.n; ++j) r(i, j) = pi.p[j] * P(j, i) / pi.p[i];
    return r;
}

Matrix gram(const Matrix& P, const PerronVector& pi) {
    return adjoint(P, pi).times(P);
}

bool is_reversible(const Matrix& P, const PerronVector& pi, double tol) {
    for (int i = 0; i < P.n; ++i)
        for (int j = i + 1; j < P.n; ++j)
            if (std::abs(pi.p[i] * P(i, j) - pi.p[j] * P(j, i)) > tol) return false;
    return true;
}

double min_weighted_entry(const Matrix& P, const PerronVector& pi) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < P.n; ++i)
        for (int j = 0; j < P.n; ++j)
            if (i != j && P(i, j) > 0.0) best = std::min(best, pi.p[i] * P(i, j));
    return best;
}

double min_diagonal(const Matrix& P) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < P.n; ++i) best = std::min(best, P(i, i));
    return best;
}

ScheduleInfima schedule_infima(const GraphSchedule& schedule, Rule rule,
                               const RuleParams& params) {
    ScheduleInfima inf;
    std::vector<PerronVector> perrons;
    for (const auto& g : schedule.graphs) {
        if (!g.has_all_self_loops())
            throw std::runtime_error("schedule_infima: a step is missing self-loops");
        Matrix A = build_rule(g, rule, params);
        PerronVector pi = perron(A);
        inf.a = std::min(inf.a, min_diagonal(A));
        inf.alpha = std::min(inf.alpha, min_weighted_entry(A, pi));
        perrons.push_back(std::move(pi));
    }
    inf.nu = 1.0;
    const std::size_t m = perrons.size();
    if (m > 1) {
        // Consecutive steps; cyclically closed for periodic schedules.
        std::size_t last = (schedule.period > 0) ? m : m - 1;
        for (std::size_t t = 0; t < last; ++t) {
            const auto& cur = perrons[t].p;
            const auto& nxt = perrons[(t + 1) % m].p;
            for (std::size_t i = 0; i < cur.size(); ++i)
                inf.nu = std::max(inf.nu, std::sqrt(nxt[i] / cur[i]));
        }
    }
    return inf;
}

}  // namespace consensus
