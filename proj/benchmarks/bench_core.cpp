#include <benchmark/benchmark.h>

#include "asym/double_graph.hpp"
#include "asym/fusion.hpp"
#include "asym/modular.hpp"

namespace {

void BM_BuildRingSU2(benchmark::State& state) {
    const asym::Model m{2, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(asym::FusionRing::build(m));
}
BENCHMARK(BM_BuildRingSU2)->Arg(6)->Arg(12);

void BM_BuildRingSU3(benchmark::State& state) {
    const asym::Model m{3, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(asym::FusionRing::build(m));
}
BENCHMARK(BM_BuildRingSU3)->Arg(3)->Arg(6)->Arg(9);

void BM_SMatrixSU3(benchmark::State& state) {
    const asym::Model m{3, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(asym::ModularData::compute(m));
}
BENCHMARK(BM_SMatrixSU3)->Arg(6)->Arg(8);

void BM_VerlindeSweepSU3_3(benchmark::State& state) {
    const auto md = asym::ModularData::compute({3, 3});
    const std::size_t f = md.table().size();
    for (auto _ : state) {
        double acc = 0;
        for (std::size_t a = 0; a < f; ++a)
            for (std::size_t b = 0; b < f; ++b)
                for (std::size_t c = 0; c < f; ++c) acc += md.verlinde(a, b, c);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_VerlindeSweepSU3_3);

void BM_DualGraph(benchmark::State& state) {
    const asym::Model m{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
    const auto ring = asym::FusionRing::build(m);
    const auto md = asym::ModularData::compute(m);
    for (auto _ : state) benchmark::DoNotOptimize(asym::dual_graph(ring, md));
}
BENCHMARK(BM_DualGraph)->Args({2, 8})->Args({3, 6});

void BM_SolveSplitSU3_6(benchmark::State& state) {
    const auto ring = asym::FusionRing::build({3, 6});
    const auto md = asym::ModularData::compute({3, 6});
    for (auto _ : state) benchmark::DoNotOptimize(asym::solve_split_edges(ring, md));
}
BENCHMARK(BM_SolveSplitSU3_6);

}  // namespace

BENCHMARK_MAIN();
