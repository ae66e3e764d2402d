#include <benchmark/benchmark.h>

#include "goose/benchmarks.hpp"
#include "goose/engineering.hpp"
#include "goose/optimizer.hpp"

namespace {

void BM_Evaluate(benchmark::State& state, const char* id) {
    const goose::Problem p = goose::benchmarks::make_problem(id);
    goose::Rng rng(1);
    std::vector<double> x(p.dim);
    for (int j = 0; j < p.dim; ++j) x[j] = rng.uniform(p.bounds.lower[j], p.bounds.upper[j]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.evaluate(x, &rng));
    }
}
BENCHMARK_CAPTURE(BM_Evaluate, sphere_d10, "F1");
BENCHMARK_CAPTURE(BM_Evaluate, rastrigin_d10, "F9");
BENCHMARK_CAPTURE(BM_Evaluate, penalized2_d10, "F13");
BENCHMARK_CAPTURE(BM_Evaluate, chebyshev_d9, "CEC01");
BENCHMARK_CAPTURE(BM_Evaluate, weierstrass_d10, "CEC06");

void BM_PenalizedWeldedBeam(benchmark::State& state) {
    const auto cp = goose::engineering::welded_beam();
    const goose::Problem p = goose::engineering::penalize(cp);
    std::vector<double> x = {0.3, 3.0, 8.0, 0.3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.evaluate(x));
    }
}
BENCHMARK(BM_PenalizedWeldedBeam);

void BM_Step(benchmark::State& state) {
    const goose::Problem p = goose::benchmarks::make_problem("F1", static_cast<int>(state.range(0)));
    goose::GooseParams params;
    params.n_agents = 30;
    goose::Rng rng(7);
    goose::SwarmState swarm = goose::make_initial_state(p, params, rng);
    for (auto _ : state) {
        goose::step(swarm, p, params, rng);
        benchmark::DoNotOptimize(swarm.best_fitness);
    }
    state.SetItemsProcessed(state.iterations() * params.n_agents);
}
BENCHMARK(BM_Step)->Arg(10)->Arg(30);

void BM_OptimizeF18(benchmark::State& state) {
    const goose::Problem p = goose::benchmarks::make_problem("F18");
    goose::GooseParams params;
    params.n_agents = 10;
    params.max_iters = 100;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(goose::optimize(p, params, seed++).best_fitness);
    }
}
BENCHMARK(BM_OptimizeF18);

} // namespace

BENCHMARK_MAIN();
