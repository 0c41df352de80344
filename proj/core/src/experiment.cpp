#include "whrt/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>

namespace whrt {

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    if (spec.policies.empty()) throw Error(ErrorCode::InvalidSpec, "no policies requested");
    if (spec.sets_per_point < 1) throw Error(ErrorCode::InvalidSpec, "sets per point must be >= 1");
    if (spec.cores < 1) throw Error(ErrorCode::InvalidSpec, "core count must be at least 1");

    ExperimentResult result;
    using clock = std::chrono::steady_clock;

    for (std::size_t p = 0; p < spec.utilizations.size() && result.complete; ++p) {
        const double u = spec.utilizations[p];
        std::vector<std::uint32_t> schedulable(spec.policies.size(), 0);
        std::vector<double> seconds(spec.policies.size(), 0.0);
        std::uint32_t done = 0;
        try {
            for (std::uint32_t s = 0; s < spec.sets_per_point; ++s) {
                GenSpec g = spec.base;
                g.utilization = u;
                g.seed = spec.seed ^ (static_cast<std::uint64_t>(p) * spec.sets_per_point + s);
                const TaskSet ts = make_taskset(g);
                for (std::size_t k = 0; k < spec.policies.size(); ++k) {
                    const auto start = clock::now();
                    const bool ok = analyze(ts, spec.cores, spec.policies[k], true).schedulable;
                    seconds[k] += std::chrono::duration<double>(clock::now() - start).count();
                    schedulable[k] += ok ? 1 : 0;
                }
                ++done;
            }
        } catch (const Error& e) {
            result.complete = false;
            result.failure = "U=" + std::to_string(u) + ": " + e.what();
        }
        if (done == 0) continue;
        for (std::size_t k = 0; k < spec.policies.size(); ++k) {
            result.rows.push_back(ExperimentRow{
                spec.policies[k], spec.base.scenario, spec.base.tasks, spec.cores,
                spec.base.window, u, done, schedulable[k],
                static_cast<double>(schedulable[k]) / static_cast<double>(done),
                seconds[k] / static_cast<double>(done)});
        }
    }

    std::stable_sort(result.rows.begin(), result.rows.end(),
                     [](const ExperimentRow& a, const ExperimentRow& b) {
                         const auto pa = to_string(a.policy);
                         const auto pb = to_string(b.policy);
                         if (pa != pb) return pa < pb;
                         return a.target_utilization < b.target_utilization;
                     });
    return result;
}

void write_experiment_csv(std::ostream& os, const ExperimentResult& result, bool include_timing) {
    os << "policy,scenario,n,n_c,K,targetU,setsTotal,setsSchedulable,ratio,meanAnalysisSeconds\n";
    for (const auto& r : result.rows) {
        os << to_string(r.policy) << ',' << to_string(r.scenario) << ',' << r.tasks << ','
           << r.cores << ',' << r.window << ',' << std::fixed << std::setprecision(4)
           << r.target_utilization << ',' << r.sets_total << ',' << r.sets_schedulable << ','
           << r.ratio << ',' << std::scientific << std::setprecision(6)
           << (include_timing ? r.mean_analysis_seconds : 0.0) << std::defaultfloat << '\n';
    }
    if (!result.complete) os << "FAILED," << result.failure << '\n';
}

}  // namespace whrt
