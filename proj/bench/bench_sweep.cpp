#include <benchmark/benchmark.h>

#include "illusion/scenario.hpp"
#include "illusion/sweep.hpp"

using namespace illusion;

namespace {

void BM_SimulateSerial(benchmark::State& state)
{
    const ScenarioConfig config = builtin_scenario();
    for (auto _ : state)
        benchmark::DoNotOptimize(run_simulate_serial(config));
}

void BM_SimulateParallel(benchmark::State& state)
{
    const ScenarioConfig config = builtin_scenario();
    for (auto _ : state)
        benchmark::DoNotOptimize(run_simulate_parallel(config));
}

void BM_SynthesizeSerial(benchmark::State& state)
{
    ScenarioConfig config = builtin_scenario();
    config.mode = state.range(0) ? SynthesisMode::Transmissive : SynthesisMode::Reflective;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_synthesize_serial(config));
}

void BM_SynthesizeParallel(benchmark::State& state)
{
    ScenarioConfig config = builtin_scenario();
    config.mode = state.range(0) ? SynthesisMode::Transmissive : SynthesisMode::Reflective;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_synthesize_parallel(config));
}

}  // namespace

BENCHMARK(BM_SimulateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SynthesizeSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SynthesizeParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
