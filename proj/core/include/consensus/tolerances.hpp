#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace consensus {

// Central tolerance configuration. Every numerical gate in the library and the
// test suites reads from one instance of this record so that a tolerance can
// be overridden in exactly one place (see Tolerances::set).
struct Tolerances {
    double row_sum = 1e-12;          // stochasticity of constructed matrices
    double perron_residual = 1e-12;  // ||P^T pi - pi||_inf after the linear solve
    double jacobi_offdiag = 1e-12;   // off-diagonal Frobenius norm at convergence
    double reversibility = 1e-10;    // detailed-balance check
    double identity = 1e-9;          // algebraic identity suites
    double soundness = 1e-9;         // bound >= lambda2 - soundness
    double contraction = 1e-10;      // per-step variance contraction slack
    double conservation = 1e-10;     // <x(t),1>_pi drift during simulation
    double early_stop = 1e-13;       // trajectory stops once N(x) falls below
    double projection = 1e-12;       // residual of projections onto the
                                     // pi-orthogonal complement of span(1)

    void set(const std::string& key, double value);
    double get(const std::string& key) const;

    static Tolerances& global();
};

}  // namespace consensus
