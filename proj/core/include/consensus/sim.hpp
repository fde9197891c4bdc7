#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "consensus/graph.hpp"
#include "consensus/matrix.hpp"

namespace consensus {

struct TrajectoryPoint {
    long t = 0;
    double V = 0.0;  // pi-weighted variance about the pi-mean
    double N = 0.0;  // max - min
};

struct Trajectory {
    std::vector<double> x0;
    long steps = 0;
    std::vector<TrajectoryPoint> snapshots;  // one per step, t = 0..steps
    bool perron_constant = false;
    double consensus_value = 0.0;      // <x0, 1>_pi when the Perron vector is constant
    double conservation_drift = 0.0;   // max |<x(t),1>_pi - <x0,1>_pi|
    double rho_hat = 0.0;              // empirical rate (trailing-window slope)
    bool converged = false;            // N fell below the early-stop threshold
    std::vector<double> x_final;
};

// Runs x(t) = A(t) x(t-1) for T steps (capped at 1e6, early stop when
// N(x) < early_stop tolerance). Records V and N at every step. When the
// Perron vector is constant across steps it also tracks conservation of
// <x(t), 1>_pi.
Trajectory simulate(const GraphSchedule& schedule, Rule rule, const RuleParams& params,
                    const std::vector<double>& x0, long T);

// Least-squares slope of log N(x(t)) over the trailing `window` fraction of
// steps, exponentiated. Returns 0 with traj.converged when the trajectory hit
// the noise floor too early to fit.
double empirical_rate(const Trajectory& traj, double window = 0.5);

// The slow-convergence schedule: a fixed balanced two-star (hub pair adjacent,
// n/2 - 1 leaves each) on which the second star's group of n/2 agents rotates
// through that star's positions, one step of the cycle per period step. Period
// is exactly n/2; every step is a connected bidirectional two-star, and one
// agent changes role per step. Requires even n >= 6.
GraphSchedule ot_two_star_schedule(int n);

struct ContractionReport {
    double worst_ratio = 0.0;       // max over steps/trials of V(t)/V(t-1)
    double worst_allowed = 0.0;     // sup over steps of lambda2(A^dag A)
    bool ok = false;                // worst_ratio <= worst_allowed + tol
    long steps_checked = 0;
};

// For `trials` random mean-zero starts, asserts the per-step variance
// contraction V(t) <= V(t-1) * sup lambda2(A^dag A) over `T` steps.
ContractionReport contraction_check(const GraphSchedule& schedule, Rule rule,
                                    const RuleParams& params, int trials, long T,
                                    std::uint64_t seed);

}  // namespace consensus
