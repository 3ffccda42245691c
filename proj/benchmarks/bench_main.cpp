#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "gtv/canonical.hpp"
#include "gtv/group_spec.hpp"
#include "gtv/hilbert.hpp"
#include "gtv/invariants.hpp"
#include "gtv/rl.hpp"
#include "gtv/toric.hpp"

namespace {

gtv::GroupSpec bench_spec(int which) {
    switch (which) {
        case 0: return gtv::normalize_spec(6, {0, 1, 2, 3});
        case 1: return gtv::normalize_spec(10, {0, 1, 3, 7});
        case 2: return gtv::normalize_spec(12, {0, 1, 2, 3, 4, 5});
        default: return gtv::normalize_spec(8, {0, 1, 3, 5});
    }
}

void BM_EnumerateInvariants(benchmark::State& state) {
    const auto spec = bench_spec(static_cast<int>(state.range(0)));
    const int t = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto basis = gtv::enumerate_invariants(spec, t);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_EnumerateInvariants)->Args({0, 1})->Args({0, 3})->Args({1, 2})->Args({2, 2});

void BM_EnumerateFibers(benchmark::State& state) {
    const auto spec = bench_spec(static_cast<int>(state.range(0)));
    const int k = static_cast<int>(state.range(1));
    gtv::ToricOptions options;
    for (auto _ : state) {
        auto fibers = gtv::enumerate_fibers(spec, k, options);
        benchmark::DoNotOptimize(fibers);
    }
}
BENCHMARK(BM_EnumerateFibers)->Args({0, 2})->Args({0, 3})->Args({1, 3})->Args({3, 4});

void BM_WlpRank(benchmark::State& state) {
    const auto spec = bench_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto report = gtv::check_wlp_failure(spec, 1, gtv::kDefaultSeed);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_WlpRank)->Arg(0)->Arg(3);

void BM_EgzSubsequence(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::vector<int> residues;
    residues.reserve(static_cast<std::size_t>(2 * d - 1));
    std::uint64_t x = 88172645463325252ull;
    for (int i = 0; i < 2 * d - 1; ++i) {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        residues.push_back(static_cast<int>(x % static_cast<std::uint64_t>(d)));
    }
    for (auto _ : state) {
        auto picked = gtv::egz_subsequence(residues, d);
        benchmark::DoNotOptimize(picked);
    }
}
BENCHMARK(BM_EgzSubsequence)->Arg(12)->Arg(64)->Arg(256);

void BM_ComputeHilbert(benchmark::State& state) {
    const auto spec = bench_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto data = gtv::compute_hilbert(spec);
        benchmark::DoNotOptimize(data);
    }
}
BENCHMARK(BM_ComputeHilbert)->Arg(0)->Arg(2);

void BM_CohomologyTable(benchmark::State& state) {
    const auto spec = gtv::normalize_spec(5, {0, 1, 2});
    const auto rl = gtv::build_rl(spec);
    for (auto _ : state) {
        auto grid = gtv::table(rl, -(spec.d() + spec.n() + 4), 0);
        auto text = gtv::render_table(grid);
        benchmark::DoNotOptimize(text);
    }
}
BENCHMARK(BM_CohomologyTable);

}  // namespace

BENCHMARK_MAIN();
