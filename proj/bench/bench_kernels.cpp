#include <benchmark/benchmark.h>

#include "threshold_atlas/arrangement.hpp"
#include "threshold_atlas/kernels.hpp"

using namespace threshold_atlas;

namespace {

int jobs_arg(const benchmark::State& state) { return static_cast<int>(state.range(1)); }

void BM_OddCyclesMappedSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(serial::odd_cycles_threshold_mapped(n));
}

void BM_OddCyclesMappedParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(parallel::odd_cycles_threshold_mapped(n, jobs_arg(state)));
}

void BM_OddAnchorsSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(serial::odd_anchors(n));
}

void BM_OddAnchorsParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(parallel::odd_anchors(n, jobs_arg(state)));
}

void BM_SignedHistogramSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(serial::odd_cycles_signed(n));
}

void BM_SignedHistogramParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(parallel::odd_cycles_signed(n, jobs_arg(state)));
}

void BM_PointCountSerial(benchmark::State& state) {
    const auto a = Arrangement::threshold(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::count_points(a, 23, CountMethod::pruned));
}

void BM_PointCountParallel(benchmark::State& state) {
    const auto a = Arrangement::threshold(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(parallel::count_points(a, 23, CountMethod::pruned, jobs_arg(state)));
}

}  // namespace

BENCHMARK(BM_OddCyclesMappedSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OddCyclesMappedParallel)->ArgsProduct({{7, 8}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OddAnchorsSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OddAnchorsParallel)->ArgsProduct({{7, 8}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SignedHistogramSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignedHistogramParallel)->ArgsProduct({{7, 8}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PointCountSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointCountParallel)->ArgsProduct({{4, 5}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
