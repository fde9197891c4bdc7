#include <benchmark/benchmark.h>

#include "consensus/bounds.hpp"
#include "consensus/graph.hpp"
#include "consensus/matrix.hpp"
#include "consensus/rng.hpp"
#include "consensus/sim.hpp"
#include "consensus/spectral.hpp"

using namespace consensus;

static void BM_JacobiEigenvalues(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    DirectedGraph g = make_family(Family::ring, n);
    Matrix met = metropolis(g);
    PerronVector pi = perron(met);
    for (auto _ : state) {
        Spectrum s = reversible_spectrum(met, pi);
        benchmark::DoNotOptimize(s.lambda2);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_JacobiEigenvalues)->Arg(33)->Arg(65)->Arg(129)->Complexity();

static void BM_PerronSolve(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    DirectedGraph g = make_family(Family::two_star, n);
    Matrix en = equal_neighbor(g);
    for (auto _ : state) {
        PerronVector pi = perron(en);
        benchmark::DoNotOptimize(pi.p.data());
    }
}
BENCHMARK(BM_PerronSolve)->Arg(64)->Arg(128)->Arg(256);

static void BM_NormalizedDiameter(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    DirectedGraph g = make_family(Family::grid, p);
    for (auto _ : state) {
        NormalizedDiameter d = normalized_diameter(g);
        benchmark::DoNotOptimize(d.value);
    }
}
BENCHMARK(BM_NormalizedDiameter)->Arg(4)->Arg(6)->Arg(8);

static void BM_GeodesicCongestion(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    DirectedGraph g = make_family(Family::grid, p);
    for (auto _ : state) {
        PathFamily fam = geodesic_family(g, GeodesicStrategy::congestion_reroute);
        benchmark::DoNotOptimize(bottleneck_measure(g, fam));
    }
}
BENCHMARK(BM_GeodesicCongestion)->Arg(4)->Arg(6)->Arg(8);

static void BM_ExactMu(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    DirectedGraph g = make_family(Family::ring, n);
    Matrix en = equal_neighbor(g);
    PerronVector pi = perron(en);
    for (auto _ : state) benchmark::DoNotOptimize(mu(en, pi));
}
BENCHMARK(BM_ExactMu)->Arg(11)->Arg(15)->Arg(19);

static void BM_SimulateSteps(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    DirectedGraph g = make_family(Family::ring, n);
    GraphSchedule sched = constant_schedule(g);
    Rng rng(1);
    std::vector<double> x0 = rng.centered_vector(n);
    for (auto _ : state) {
        Trajectory t = simulate(sched, Rule::metropolis, RuleParams{}, x0, 200);
        benchmark::DoNotOptimize(t.rho_hat);
    }
}
BENCHMARK(BM_SimulateSteps)->Arg(65)->Arg(257)->Arg(1025);

static void BM_FullReport(benchmark::State& state) {
    DirectedGraph g = make_family(Family::grid, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        BoundReport r = full_report(g, "grid", Rule::metropolis, RuleParams{});
        benchmark::DoNotOptimize(r.rate_bound);
    }
}
BENCHMARK(BM_FullReport)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
