// Serial reference loop vs OpenMP trial loop, plus the per-frame kernels.

#include <benchmark/benchmark.h>

#include "pilotshift/experiments.hpp"
#include "pilotshift/signal.hpp"
#include "pilotshift/transmitter.hpp"

namespace {

using namespace pilotshift;

ExperimentConfig bench_config(Execution execution) {
    ExperimentConfig c;
    c.frames = 2000;
    c.execution = execution;
    return c;
}

void BM_Ifft(benchmark::State& state) {
    FreqFrame frame{std::vector<Complex>(static_cast<std::size_t>(state.range(0)), Complex(1.0, -1.0))};
    for (auto _ : state) benchmark::DoNotOptimize(ifft(frame));
}
BENCHMARK(BM_Ifft)->RangeMultiplier(4)->Range(64, 4096);

void BM_MinimizePapr(benchmark::State& state) {
    const PilotGeometry g{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 9.0};
    const DataSymbols data(static_cast<std::size_t>(g.data_count()), Complex(0.7071, 0.7071));
    for (auto _ : state) benchmark::DoNotOptimize(minimize_papr(data, g, 8));
}
BENCHMARK(BM_MinimizePapr)->Args({64, 4})->Args({256, 16});

void BM_CcdfSerial(benchmark::State& state) {
    const auto c = bench_config(Execution::serial);
    for (auto _ : state) benchmark::DoNotOptimize(run_ccdf(c));
}
BENCHMARK(BM_CcdfSerial)->Unit(benchmark::kMillisecond);

void BM_CcdfParallel(benchmark::State& state) {
    const auto c = bench_config(Execution::parallel);
    for (auto _ : state) benchmark::DoNotOptimize(run_ccdf(c));
}
BENCHMARK(BM_CcdfParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DetectionSerial(benchmark::State& state) {
    auto c = bench_config(Execution::serial);
    c.geometry = {256, 16, 9.0};
    for (auto _ : state) benchmark::DoNotOptimize(run_detection_error(c));
}
BENCHMARK(BM_DetectionSerial)->Unit(benchmark::kMillisecond);

void BM_DetectionParallel(benchmark::State& state) {
    auto c = bench_config(Execution::parallel);
    c.geometry = {256, 16, 9.0};
    for (auto _ : state) benchmark::DoNotOptimize(run_detection_error(c));
}
BENCHMARK(BM_DetectionParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
