#include "consensus/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "consensus/rng.hpp"
#include "consensus/spectral.hpp"
#include "consensus/tolerances.hpp"

namespace consensus {

namespace {

constexpr long kStepCap = 1000000;

double pi_variance(const std::vector<double>& pi, const std::vector<double>& x) {
    double mean = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) mean += pi[i] * x[i];
    double v = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - mean;
        v += pi[i] * d * d;
    }
    return v;
}

double spread(const std::vector<double>& x) {
    auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    return *hi - *lo;
}

struct PreparedSchedule {
    std::vector<Matrix> mats;          // one per distinct step
    std::vector<PerronVector> perrons;
    bool perron_constant = true;

    PreparedSchedule(const GraphSchedule& schedule, Rule rule, const RuleParams& params) {
        for (const auto& g : schedule.graphs) {
            mats.push_back(build_rule(g, rule, params));
            perrons.push_back(perron(mats.back()));
        }
        for (std::size_t s = 1; s < perrons.size() && perron_constant; ++s)
            for (int i = 0; i < mats[0].n; ++i)
                if (std::abs(perrons[s].p[i] - perrons[0].p[i]) > 1e-10) {
                    perron_constant = false;
                    break;
                }
    }

    std::size_t index(const GraphSchedule& schedule, long t) const {
        if (schedule.period > 0) return static_cast<size_t>(t % schedule.period);
        return static_cast<size_t>(t);
    }
};

}  // namespace

Trajectory simulate(const GraphSchedule& schedule, Rule rule, const RuleParams& params,
                    const std::vector<double>& x0, long T) {
    if (schedule.graphs.empty()) throw std::invalid_argument("simulate: empty schedule");
    PreparedSchedule prep(schedule, rule, params);
    if (static_cast<int>(x0.size()) != prep.mats[0].n)
        throw std::invalid_argument("simulate: x0 size does not match the schedule");
    long limit = std::min(T, kStepCap);
    if (schedule.period == 0)
        limit = std::min(limit, static_cast<long>(schedule.graphs.size()));

    Trajectory traj;
    traj.x0 = x0;
    traj.perron_constant = prep.perron_constant;
    if (prep.perron_constant) {
        traj.consensus_value = 0.0;
        for (std::size_t i = 0; i < x0.size(); ++i)
            traj.consensus_value += prep.perrons[0].p[i] * x0[i];
    }
    const double stop = Tolerances::global().early_stop;

    std::vector<double> x = x0;
    traj.snapshots.push_back({0, pi_variance(prep.perrons[prep.index(schedule, 0)].p, x),
                              spread(x)});
    long t = 0;
    if (traj.snapshots.back().N < stop) traj.converged = true;
    while (!traj.converged && t < limit) {
        std::size_t idx = prep.index(schedule, t);
        x = prep.mats[idx].apply(x);
        ++t;
        traj.snapshots.push_back({t, pi_variance(prep.perrons[idx].p, x), spread(x)});
        if (prep.perron_constant) {
            double mass = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) mass += prep.perrons[0].p[i] * x[i];
            traj.conservation_drift =
                std::max(traj.conservation_drift, std::abs(mass - traj.consensus_value));
        }
        if (traj.snapshots.back().N < stop) {
            traj.converged = true;
            break;
        }
    }
    traj.steps = t;
    traj.x_final = std::move(x);
    traj.rho_hat = empirical_rate(traj);
    return traj;
}

double empirical_rate(const Trajectory& traj, double window) {
    // Least-squares slope of log N over the trailing window, exponentiated.
    long start = static_cast<long>(std::ceil(traj.steps * (1.0 - window)));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long m = 0;
    for (const auto& pt : traj.snapshots) {
        if (pt.t < start || pt.N <= 0.0) continue;
        double y = std::log(pt.N);
        sx += pt.t;
        sy += y;
        sxx += static_cast<double>(pt.t) * pt.t;
        sxy += pt.t * y;
        ++m;
    }
    if (m < 3) return 0.0;
    double denom = m * sxx - sx * sx;
    if (denom <= 0.0) return 0.0;
    return std::exp((m * sxy - sx * sy) / denom);
}

GraphSchedule ot_two_star_schedule(int n) {
    if (n < 6 || n % 2 != 0)
        throw std::invalid_argument("ot_two_star_schedule: need even n >= 6");
    const int h = n / 2;
    // Fixed balanced two-star layout; agents 0..h-1 hold the first star
    // (agent 0 at its hub), agents h..n-1 cycle through the second star's
    // positions (hub first, then leaves), advancing one position per step.
    GraphSchedule sched;
    sched.period = h;
    sched.kind = "ot_two_star";
    for (int t = 0; t < h; ++t) {
        std::vector<std::pair<int, int>> arcs;
        auto link = [&](int a, int b) {
            arcs.emplace_back(a, b);
            arcs.emplace_back(b, a);
        };
        int hub2 = h + (t % h);
        link(0, hub2);
        for (int a = 1; a < h; ++a) link(0, a);
        for (int k = 1; k < h; ++k) link(hub2, h + (k + t) % h);
        sched.graphs.push_back(DirectedGraph::from_arcs(n, std::move(arcs)));
    }
    return sched;
}

ContractionReport contraction_check(const GraphSchedule& schedule, Rule rule,
                                    const RuleParams& params, int trials, long T,
                                    std::uint64_t seed) {
    PreparedSchedule prep(schedule, rule, params);
    const int n = prep.mats[0].n;
    ContractionReport rep;
    std::vector<double> allowed(prep.mats.size());
    for (std::size_t s = 0; s < prep.mats.size(); ++s) {
        Matrix G = gram(prep.mats[s], prep.perrons[s]);
        allowed[s] = reversible_spectrum(G, prep.perrons[s]).lambda2;
        rep.worst_allowed = std::max(rep.worst_allowed, allowed[s]);
    }
    long limit = std::min(T, kStepCap);
    if (schedule.period == 0)
        limit = std::min(limit, static_cast<long>(schedule.graphs.size()));
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> x = rng.centered_vector(n);
        for (long t = 0; t < limit; ++t) {
            std::size_t idx = prep.index(schedule, t);
            const auto& pi = prep.perrons[idx].p;
            double before = pi_variance(pi, x);
            if (before < 1e-26) break;
            x = prep.mats[idx].apply(x);
            double ratio = pi_variance(pi, x) / before;
            rep.worst_ratio = std::max(rep.worst_ratio, ratio);
            ++rep.steps_checked;
        }
    }
    rep.ok = rep.worst_ratio <= rep.worst_allowed + Tolerances::global().contraction;
    return rep;
}

}  // namespace consensus
