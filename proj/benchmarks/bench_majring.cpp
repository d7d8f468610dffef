#include <benchmark/benchmark.h>

#include <random>

#include "majring/blocks.hpp"
#include "majring/config.hpp"
#include "majring/enumeration.hpp"
#include "majring/stability.hpp"

using namespace majring;

namespace {

Configuration random_config(std::mt19937_64& rng, int n) {
    Configuration cfg(n);
    for (int i = 0; i < n; ++i) cfg.set(i, rng() & 1);
    return cfg;
}

void BM_step_sliding(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    std::mt19937_64 rng(1);
    Configuration cfg = random_config(rng, n);
    for (auto _ : state) {
        cfg = step(cfg, Rule::majority(r));
        benchmark::DoNotOptimize(cfg);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_step_sliding)->Args({64, 2})->Args({512, 4})->Args({4096, 8});

void BM_step_word(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    std::mt19937_64 rng(1);
    const WordRule wr(n, r);
    std::uint64_t bits = rng() & wr.mask();
    for (auto _ : state) {
        bits = wr.step(bits);
        benchmark::DoNotOptimize(bits);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_step_word)->Args({24, 2})->Args({64, 2})->Args({64, 6});

void BM_evolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    std::mt19937_64 rng(2);
    for (auto _ : state) {
        const Trajectory traj = evolve(random_config(rng, n), Rule::majority(r));
        benchmark::DoNotOptimize(traj.states.size());
    }
}
BENCHMARK(BM_evolve)->Args({512, 4})->Args({2048, 6});

void BM_classify_stability(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(3);
    const Configuration cfg = random_config(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(classify_stability(cfg, Rule::majority(3)));
}
BENCHMARK(BM_classify_stability)->Arg(512);

void BM_enumerate_bruteforce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto found = enumerate_bruteforce(n, 2, Rule::majority(2));
        benchmark::DoNotOptimize(found.size());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_enumerate_bruteforce)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_generate_patterns(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const GeneratorSet gs = generate_patterns(r);
        benchmark::DoNotOptimize(gs.generators.size());
    }
    state.SetLabel("radius " + std::to_string(r));
}
BENCHMARK(BM_generate_patterns)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
