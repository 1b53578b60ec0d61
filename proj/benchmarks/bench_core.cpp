#include "dunkl/equilibrium.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/orthopoly.hpp"
#include "dunkl/sde.hpp"
#include "dunkl/symfunc.hpp"

#include <benchmark/benchmark.h>

using namespace dunkl;

static void BM_EulerStepA(benchmark::State& state)
{
    const auto cfg = RootSystemConfig::type_a(static_cast<int>(state.range(0)), 2.0);
    ParticleState s;
    for (int i = 0; i < cfg.n; ++i) s.positions.push_back(i);
    const Vec noise(static_cast<std::size_t>(cfg.n), 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(euler_step(cfg, s, 1e-4, noise));
}
BENCHMARK(BM_EulerStepA)->Arg(3)->Arg(7)->Arg(25);

static void BM_SimulatePaths(benchmark::State& state)
{
    SimPlan plan;
    plan.cfg = RootSystemConfig::type_a(3, 2.0);
    plan.dt = 1e-3;
    plan.t_final = 1.0;
    plan.n_paths = state.range(0);
    plan.initial = {0.0, 1.0, 2.0};
    plan.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_paths(plan));
    state.SetItemsProcessed(state.iterations() * plan.n_paths * 1000 * 3);
}
BENCHMARK(BM_SimulatePaths)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_PeakSet(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto cfg = state.range(1) == 0 ? RootSystemConfig::type_a(n, 1.0) : RootSystemConfig::type_b(n, 1.0, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(peak_set(cfg));
}
BENCHMARK(BM_PeakSet)->Args({7, 0})->Args({25, 0})->Args({7, 1})->Args({25, 1});

static void BM_HermiteZeros(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(hermite_zeros(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HermiteZeros)->Arg(10)->Arg(50);

static void BM_JackEval(benchmark::State& state)
{
    const Partition lambda{3, 2, 1};
    const Vec x{0.3, 0.7, 1.1, 1.4};
    jack_coeffs(lambda, 0.5, 4);
    for (auto _ : state) benchmark::DoNotOptimize(jack_eval(lambda, 0.5, x));
}
BENCHMARK(BM_JackEval);

static void BM_SchurEval(benchmark::State& state)
{
    const Partition lambda{4, 2, 1};
    const Vec x{0.3, 0.7, 1.1, 1.4, 1.9};
    for (auto _ : state) benchmark::DoNotOptimize(schur_eval(lambda, x));
}
BENCHMARK(BM_SchurEval);

static void BM_VAOnMonomial(benchmark::State& state)
{
    const Partition lambda{2, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(v_a_on_monomial(lambda, 4, 2.0));
}
BENCHMARK(BM_VAOnMonomial);

static void BM_HyperSeriesEval(benchmark::State& state)
{
    HyperSeriesParams p;
    p.alpha = 1.0;
    p.n_vars = static_cast<int>(state.range(0));
    p.max_degree = static_cast<int>(state.range(1));
    const HyperSeries series(p);
    const Vec x(static_cast<std::size_t>(p.n_vars), 0.4);
    Vec y(static_cast<std::size_t>(p.n_vars));
    for (int i = 0; i < p.n_vars; ++i) y[static_cast<std::size_t>(i)] = 0.1 * (i + 1);
    for (auto _ : state) benchmark::DoNotOptimize(series(x, y));
}
BENCHMARK(BM_HyperSeriesEval)->Args({2, 24})->Args({3, 30});

static void BM_SteadyStateFke(benchmark::State& state)
{
    const auto cfg = RootSystemConfig::type_b(3, 2.0, 0.5);
    const Vec v{0.4, 1.1, 1.9};
    const auto logf = [&cfg](const Vec& u) { return steady_state_logdensity(cfg, u); };
    for (auto _ : state) benchmark::DoNotOptimize(fke_residual(cfg, logf, v));
}
BENCHMARK(BM_SteadyStateFke);

BENCHMARK_MAIN();
