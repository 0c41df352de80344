#include <gtest/gtest.h>

#include <sstream>

#include "whrt/experiment.hpp"

using namespace whrt;

namespace {

ExperimentSpec small_spec() {
    ExperimentSpec spec;
    spec.base.tasks = 6;
    spec.base.scenario = Scenario::AllHigh;
    spec.cores = 2;
    spec.policies = {InterferencePolicy::WeaklyHardJC0, InterferencePolicy::FixedPriorityRM,
                     InterferencePolicy::GlobalEDF};
    spec.sets_per_point = 20;
    spec.seed = 5;
    return spec;
}

std::string csv(const ExperimentResult& r, bool timing) {
    std::ostringstream os;
    write_experiment_csv(os, r, timing);
    return os.str();
}

}  // namespace

TEST(RunExperiment, LightAndOverloadedPoints) {
    auto spec = small_spec();
    spec.cores = 1;
    spec.utilizations = {0.1, 4.5};
    const auto result = run_experiment(spec);
    ASSERT_TRUE(result.complete);
    ASSERT_EQ(result.rows.size(), 6u);
    for (const auto& row : result.rows) {
        EXPECT_EQ(row.sets_total, 20u);
        if (row.target_utilization < 1.0) {
            EXPECT_DOUBLE_EQ(row.ratio, 1.0) << to_string(row.policy);
        } else if (row.policy != InterferencePolicy::WeaklyHardJC0) {
            EXPECT_DOUBLE_EQ(row.ratio, 0.0) << to_string(row.policy);
        }
    }
}

TEST(RunExperiment, RowsSortedByPolicyThenUtilization) {
    auto spec = small_spec();
    spec.utilizations = {1.5, 0.5};
    const auto rows = run_experiment(spec).rows;
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0].policy, InterferencePolicy::GlobalEDF);
    EXPECT_DOUBLE_EQ(rows[0].target_utilization, 0.5);
    EXPECT_DOUBLE_EQ(rows[1].target_utilization, 1.5);
    EXPECT_EQ(rows[2].policy, InterferencePolicy::FixedPriorityRM);
    EXPECT_EQ(rows[4].policy, InterferencePolicy::WeaklyHardJC0);
}

TEST(RunExperiment, WeaklyHardAtLeastRmPerPoint) {
    auto spec = small_spec();
    spec.utilizations = {1.0, 1.4, 1.8};
    const auto rows = run_experiment(spec).rows;
    for (const auto& wh : rows) {
        if (wh.policy != InterferencePolicy::WeaklyHardJC0) continue;
        for (const auto& rm : rows) {
            if (rm.policy == InterferencePolicy::FixedPriorityRM &&
                rm.target_utilization == wh.target_utilization) {
                EXPECT_GE(wh.sets_schedulable, rm.sets_schedulable);
            }
        }
    }
}

TEST(RunExperiment, FailureKeepsFinishedRows) {
    auto spec = small_spec();
    spec.utilizations = {1.0, 7.0};
    const auto result = run_experiment(spec);
    EXPECT_FALSE(result.complete);
    EXPECT_EQ(result.rows.size(), 3u);
    const auto text = csv(result, false);
    EXPECT_NE(text.find("\nFAILED,U=7"), std::string::npos) << text;
}

TEST(RunExperiment, RejectsEmptyPolicies) {
    auto spec = small_spec();
    spec.policies.clear();
    EXPECT_THROW(run_experiment(spec), Error);
}

TEST(WriteExperimentCsv, ByteIdenticalWithoutTiming) {
    auto spec = small_spec();
    spec.utilizations = {1.2, 1.6};
    const auto a = csv(run_experiment(spec), false);
    const auto b = csv(run_experiment(spec), false);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.substr(0, a.find('\n')),
              "policy,scenario,n,n_c,K,targetU,setsTotal,setsSchedulable,ratio,meanAnalysisSeconds");
    EXPECT_NE(a.find("\nedf,high,6,2,5,1.2000,20,"), std::string::npos) << a;
}
