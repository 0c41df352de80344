#include <benchmark/benchmark.h>

#include "whrt/gen.hpp"
#include "whrt/rta.hpp"
#include "whrt/sequences.hpp"
#include "whrt/sim.hpp"

namespace {

whrt::TaskSet generated(std::uint32_t tasks, std::uint32_t window, whrt::Scenario scenario,
                        double utilization) {
    whrt::GenSpec g;
    g.tasks = tasks;
    g.window = window;
    g.scenario = scenario;
    g.utilization = utilization;
    g.seed = 11;
    return whrt::make_taskset(g);
}

void BM_AnalyzeWeaklyHard(benchmark::State& state) {
    const auto ts = generated(static_cast<std::uint32_t>(state.range(0)),
                              static_cast<std::uint32_t>(state.range(1)), whrt::Scenario::AllHigh,
                              3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(whrt::analyze(ts, 4, whrt::InterferencePolicy::WeaklyHardJC0));
    }
}
BENCHMARK(BM_AnalyzeWeaklyHard)->ArgsProduct({{20, 100}, {5, 50, 500}});

void BM_AnalyzeBaseline(benchmark::State& state) {
    const auto policy = static_cast<whrt::InterferencePolicy>(state.range(0));
    const auto ts = generated(100, 5, whrt::Scenario::AllHigh, 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(whrt::analyze(ts, 4, policy));
}
BENCHMARK(BM_AnalyzeBaseline)
    ->Arg(static_cast<int>(whrt::InterferencePolicy::FixedPriorityRM))
    ->Arg(static_cast<int>(whrt::InterferencePolicy::GlobalEDF));

void BM_TransformationCost(benchmark::State& state) {
    const whrt::WeaklyHardConstraint c(static_cast<std::uint32_t>(state.range(0) / 2),
                                       static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(whrt::transformation_cost(c));
}
BENCHMARK(BM_TransformationCost)->Arg(10)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
    const auto ts = generated(static_cast<std::uint32_t>(state.range(0)), 5,
                              whrt::Scenario::AllLow, 2.5);
    const auto table = whrt::assign_priorities(ts);
    whrt::SimConfig cfg;
    cfg.cores = 4;
    cfg.horizon = 100000;
    cfg.record_jobs = false;
    for (auto _ : state) benchmark::DoNotOptimize(whrt::simulate(ts, table, cfg));
}
BENCHMARK(BM_Simulate)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
