#include <benchmark/benchmark.h>

#include "mmst/instances.hpp"
#include "mmst/proximity.hpp"
#include "mmst/recognition.hpp"
#include "mmst/ummst.hpp"
#include "mmst/ummst2d.hpp"
#include "mmst/xymmst.hpp"
#include "mmst/ymmst.hpp"

namespace {

mmst::RootedPointSet instance(std::size_t n, bool avoid_axes, bool certify) {
    mmst::instances::Params gen;
    gen.n = n;
    gen.seed = 42;
    gen.avoid_axes = avoid_axes;
    gen.certify_general_position = certify;
    return mmst::instances::make(gen);
}

const mmst::Axis kGenericAxis = mmst::Axis::from_direction(1000003, 314159);

void BM_Ymmst(benchmark::State& state) {
    const auto ps = instance(static_cast<std::size_t>(state.range(0)), false, false);
    for (auto _ : state) {
        auto tree = mmst::ymmst(ps, kGenericAxis);
        benchmark::DoNotOptimize(tree);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Ymmst)->RangeMultiplier(2)->Range(1 << 12, 1 << 17)->Complexity()->Unit(benchmark::kMillisecond);

void BM_Xymmst(benchmark::State& state) {
    const auto ps = instance(static_cast<std::size_t>(state.range(0)), true, false);
    const auto sys = mmst::OrthoSystem::from_degrees(90.0);
    for (auto _ : state) {
        auto tree = mmst::xymmst(ps, sys);
        benchmark::DoNotOptimize(tree);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Xymmst)->RangeMultiplier(2)->Range(1 << 12, 1 << 16)->Complexity()->Unit(benchmark::kMillisecond);

void BM_Ummst(benchmark::State& state) {
    const auto ps = instance(static_cast<std::size_t>(state.range(0)), false, true);
    for (auto _ : state) {
        auto res = mmst::ummst(ps);
        benchmark::DoNotOptimize(res);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Ummst)->RangeMultiplier(2)->Range(1 << 8, 1 << 11)->Complexity()->Unit(benchmark::kMillisecond);

void BM_Ummst2d(benchmark::State& state) {
    const auto ps = instance(static_cast<std::size_t>(state.range(0)), false, true);
    for (auto _ : state) {
        auto res = mmst::ummst2d(ps);
        benchmark::DoNotOptimize(res);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Ummst2d)->RangeMultiplier(2)->Range(1 << 8, 1 << 11)->Complexity()->Unit(benchmark::kMillisecond);

void BM_NnInsertQuery(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto ps = instance(n * 2, false, false);
    for (auto _ : state) {
        mmst::SemiDynamicNN nn;
        for (std::uint32_t i = 0; i < n; ++i) nn.insert(ps.exact(i), i);
        mmst::uint128 sink = 0;
        for (std::uint32_t i = 0; i < n; ++i) sink += nn.nearest(ps.exact(n + i))->sq;
        benchmark::DoNotOptimize(sink);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NnInsertQuery)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity()->Unit(benchmark::kMillisecond);

void BM_UniformRecognition(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto ps = instance(n, false, true);
    const auto tree = mmst::ummst(ps).tree;
    const auto g = tree.to_graph();
    for (auto _ : state) {
        auto axis = mmst::uniform_monotone_axis(g);
        benchmark::DoNotOptimize(axis);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_UniformRecognition)->RangeMultiplier(2)->Range(1 << 8, 1 << 11)->Complexity()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
