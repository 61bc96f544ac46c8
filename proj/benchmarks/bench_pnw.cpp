#include <benchmark/benchmark.h>

#include <random>

#include "pnw/bubble_gen.hpp"
#include "pnw/jpm.hpp"
#include "pnw/pn_core.hpp"
#include "pnw/pn_gen.hpp"
#include "pnw/stats.hpp"

namespace {

pnw::binary_word random_word(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    pnw::binary_word w(n);
    for (std::size_t i = 0; i < n; ++i) w.set_bit(i, rng() & 1u);
    return w;
}

void BM_count_pn_all(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t words = 0;
    for (auto _ : state) {
        const std::uint64_t count = pnw::count_pn_all(n);
        benchmark::DoNotOptimize(count);
        words += count;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(words));
}

void BM_coollex_fixed_density(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t words = 0;
    for (auto _ : state) {
        std::uint64_t count = 0;
        pnw::generate_fixed_density(n, n / 2, pnw::accept_all_oracle{},
                                    [&](const pnw::binary_word&, const pnw::gen_node&) {
                                        ++count;
                                    });
        benchmark::DoNotOptimize(count);
        words += count;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(words));
}

void BM_is_prefix_normal(benchmark::State& state) {
    const auto w = random_word(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        const bool normal = pnw::is_prefix_normal(w);
        benchmark::DoNotOptimize(normal);
    }
}

void BM_pnf(benchmark::State& state) {
    const auto w = random_word(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) {
        const auto form = pnw::pnf(w);
        benchmark::DoNotOptimize(form);
    }
}

void BM_jpm_build(benchmark::State& state) {
    const auto w = random_word(static_cast<std::size_t>(state.range(0)), 13);
    for (auto _ : state) {
        const auto index = pnw::build_index(w);
        benchmark::DoNotOptimize(index);
    }
}

void BM_jpm_query(benchmark::State& state) {
    const std::size_t n = 4096;
    const auto index = pnw::build_index(random_word(n, 17));
    std::mt19937_64 rng(19);
    for (auto _ : state) {
        const std::uint64_t x = rng() % (n / 2);
        const std::uint64_t y = rng() % (n / 2);
        const bool hit = pnw::query(index, x, y);
        benchmark::DoNotOptimize(hit);
    }
}

void BM_random_pnf_experiment(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const auto sample = pnw::random_pnf_experiment(n, 1000, 23);
        benchmark::DoNotOptimize(sample);
    }
}

BENCHMARK(BM_count_pn_all)->DenseRange(16, 24, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coollex_fixed_density)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_is_prefix_normal)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_pnf)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_jpm_build)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_jpm_query);
BENCHMARK(BM_random_pnf_experiment)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
