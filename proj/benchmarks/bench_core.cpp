#include <benchmark/benchmark.h>

#include <solvgraph/catalog.hpp>
#include <solvgraph/graph.hpp>
#include <solvgraph/verify.hpp>

using namespace solvgraph;

namespace {

std::vector<Vec> random_rows(uint64_t seed, uint32_t p, uint32_t n, size_t count) {
    SplitMix64 rng(seed);
    std::vector<Vec> rows(count, Vec(n));
    for (auto& row : rows)
        for (auto& c : row) c = static_cast<uint8_t>(rng.below(p));
    return rows;
}

void BM_rref(benchmark::State& state) {
    Fp f(3);
    const uint32_t n = static_cast<uint32_t>(state.range(0));
    auto rows = random_rows(11, 3, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Subspace::span(f, n, rows));
    }
}
BENCHMARK(BM_rref)->Arg(4)->Arg(6)->Arg(8);

void BM_pair_solvable_cold(benchmark::State& state) {
    AlgebraPtr L = catalog_algebra("E2@3");
    auto universe = all_vectors(L->field(), L->n());
    SplitMix64 rng(5);
    for (auto _ : state) {
        state.PauseTiming();
        PairOracle oracle(L);  // fresh cache each round
        state.ResumeTiming();
        for (int i = 0; i < 64; ++i)
            benchmark::DoNotOptimize(
                oracle.solvable(universe[rng.below(universe.size())],
                                universe[rng.below(universe.size())]));
    }
}
BENCHMARK(BM_pair_solvable_cold);

void BM_pair_solvable_cached(benchmark::State& state) {
    AlgebraPtr L = catalog_algebra("E2@3");
    PairOracle oracle(L);
    auto universe = all_vectors(L->field(), L->n());
    for (const Vec& a : universe)
        for (const Vec& b : universe) oracle.solvable(a, b);
    SplitMix64 rng(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle.solvable(universe[rng.below(universe.size())],
                                                 universe[rng.below(universe.size())]));
    }
}
BENCHMARK(BM_pair_solvable_cached);

void BM_build_graph(benchmark::State& state) {
    AlgebraPtr L = catalog_algebra(state.range(0) == 0 ? "E2@3" : "gl2split@3");
    for (auto _ : state) {
        PairOracle oracle(L);
        benchmark::DoNotOptimize(build_graph(oracle, GraphKind::Solvable));
    }
}
BENCHMARK(BM_build_graph)->Arg(0)->Arg(1);

void BM_solvabilizer_sum(benchmark::State& state) {
    DirectSum ds = direct_sum(catalog_algebra("E2@3"), catalog_algebra("E1@3"));
    for (auto _ : state) {
        PairOracle oracle(ds.algebra);
        benchmark::DoNotOptimize(solvabilizer(oracle));
    }
}
BENCHMARK(BM_solvabilizer_sum);

void BM_derived_series(benchmark::State& state) {
    AlgebraPtr L = catalog_algebra("gl2split@3");
    Subspace full = full_space(*L);
    for (auto _ : state) {
        benchmark::DoNotOptimize(derived_series(*L, full));
    }
}
BENCHMARK(BM_derived_series);

}  // namespace

BENCHMARK_MAIN();
