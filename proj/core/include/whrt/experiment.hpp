#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "whrt/gen.hpp"
#include "whrt/rta.hpp"

namespace whrt {

struct ExperimentSpec {
    std::vector<double> utilizations;
    GenSpec base;  // utilization and seed are overwritten per generated set
    std::uint32_t cores = 4;
    std::vector<InterferencePolicy> policies;
    std::uint32_t sets_per_point = 100;
    std::uint64_t seed = 0;
};

struct ExperimentRow {
    InterferencePolicy policy;
    Scenario scenario;
    std::uint32_t tasks;
    std::uint32_t cores;
    std::uint32_t window;
    double target_utilization;
    std::uint32_t sets_total;
    std::uint32_t sets_schedulable;
    double ratio;
    double mean_analysis_seconds;
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;  // sorted by (policy, utilization)
    bool complete = true;
    std::string failure;              // set when complete is false
};

// Set s of utilization point p is generated from seed ^ (p * sets_per_point + s)
// and analyzed by every requested policy, so policies compare on identical sets.
// A generation or analysis error stops the sweep; rows finished so far are kept.
ExperimentResult run_experiment(const ExperimentSpec& spec);

// policy,scenario,n,n_c,K,targetU,setsTotal,setsSchedulable,ratio,meanAnalysisSeconds
// An incomplete run ends with a row starting "FAILED". With include_timing
// false the timing column is written as 0 so reruns are byte-identical.
void write_experiment_csv(std::ostream& os, const ExperimentResult& result, bool include_timing);

}  // namespace whrt
