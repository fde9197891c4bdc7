#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace consensus {

// Result of one verification suite: counters plus human-readable failure
// records. A suite passes iff failures == 0.
struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> messages;  // one per failure (or notable event)

    bool ok() const { return failures == 0; }
};

// 200 seeded random connected bidirectional graphs (n in [4,12]) x
// {Metropolis, Lazy Metropolis, EqualNeighbor}: every computed upper bound
// must dominate the exact lambda2 and the Cheeger lower bound must not.
SuiteResult run_soundness_suite(std::uint64_t seed);

// Algebraic identities on random graphs/vectors: Green formula, variance
// identity, N >= sqrt(2)||.||_pi on the mean-free subspace, adjoint
// involution and stochasticity, lambda2(A^dag A) = max(lambda_n^2, lambda2^2)
// for reversible A. >= 10^4 checks.
SuiteResult run_identities_suite(std::uint64_t seed);

// Random time-varying connected bidirectional schedules (n in {8,16,32}):
// per-step variance ratios against the closed-form quadratic rates of
// Metropolis and Lazy Metropolis.
SuiteResult run_quadratic_suite(std::uint64_t seed);

// Slow/fast separation on the rotating two-star schedule (n = 12) plus the
// barbell eigenvector-start rate identity and the trivial consensus start.
SuiteResult run_slow_examples_suite(std::uint64_t seed);

SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace consensus
