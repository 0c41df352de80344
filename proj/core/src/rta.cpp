#include "whrt/rta.hpp"

#include <algorithm>

namespace whrt {

namespace {

// Shared body of both workload bounds; `period` may be an inflated one.
WorkloadTerms bound_with_period(Ticks wcet, Ticks period, Ticks response_bound, Ticks slack,
                                Ticks interval) {
    WorkloadTerms w;
    const Ticks span = interval + response_bound - wcet - slack;
    if (span <= 0) return w;
    w.jobs = span / period;
    const Ticks remainder = span - w.jobs * period;
    w.workload = w.jobs * wcet + std::min(wcet, remainder);
    return w;
}

Ticks effective_bound(const Task& t, Ticks known) { return std::min(known, t.deadline); }

Ticks slack_of(const Task& t, Ticks bound) { return std::max<Ticks>(t.deadline - bound, 0); }

std::vector<std::size_t> interferers_of(std::size_t k, const TaskSet& ts,
                                        InterferencePolicy policy, const JobClassTable* table) {
    std::vector<std::size_t> out;
    switch (policy) {
        case InterferencePolicy::GlobalEDF:
            for (std::size_t i = 0; i < ts.size(); ++i) {
                if (i != k) out.push_back(i);
            }
            break;
        case InterferencePolicy::FixedPriorityRM: {
            const auto order = table ? table->order : deadline_order(ts);
            for (std::size_t idx : order) {
                if (idx == k) break;
                out.push_back(idx);
            }
            break;
        }
        case InterferencePolicy::WeaklyHardJC0: {
            if (table == nullptr || !table->consistent_with(ts)) {
                throw Error(ErrorCode::InvalidConfig,
                            "weakly-hard analysis needs a job-class table matching the task set");
            }
            const Priority own = table->top_priority(k);
            for (std::size_t i = 0; i < ts.size(); ++i) {
                if (i != k && table->top_priority(i) > own) out.push_back(i);
            }
            break;
        }
    }
    return out;
}

TaskVerdict fixed_point(std::size_t k, const TaskSet& ts, std::uint32_t cores,
                        InterferencePolicy policy, std::span<const std::size_t> interferers,
                        std::span<const Ticks> known_bounds) {
    const Task& task = ts[k];
    const Ticks c = task.wcet;
    const auto n_cores = static_cast<Ticks>(cores);

    Ticks r = c;
    for (;;) {
        Ticks sum = 0;
        const Ticks cap = r - c + 1;
        for (std::size_t i : interferers) {
            const Task& other = ts[i];
            const Ticks bound = effective_bound(other, known_bounds[i]);
            const Ticks slack = slack_of(other, bound);
            const WorkloadTerms w = policy == InterferencePolicy::WeaklyHardJC0
                                        ? wh_workload(other, bound, slack, r)
                                        : baseline_workload(other, bound, slack, r);
            sum += std::min(w.workload, cap);
        }
        const Ticks next = c + sum / n_cores;
        if (next > task.deadline) {
            return TaskVerdict{task.id, task.deadline + 1, 0, false};
        }
        if (next == r) break;
        r = next;
    }
    return TaskVerdict{task.id, r, slack_of(task, r), true};
}

TaskVerdict unanalyzed(const Task& t) { return TaskVerdict{t.id, t.deadline + 1, 0, false}; }

}  // namespace

std::string_view to_string(InterferencePolicy p) noexcept {
    switch (p) {
        case InterferencePolicy::FixedPriorityRM: return "rm";
        case InterferencePolicy::GlobalEDF: return "edf";
        case InterferencePolicy::WeaklyHardJC0: return "wh";
    }
    return "unknown";
}

InterferencePolicy parse_policy(std::string_view name) {
    if (name == "rm") return InterferencePolicy::FixedPriorityRM;
    if (name == "edf") return InterferencePolicy::GlobalEDF;
    if (name == "wh") return InterferencePolicy::WeaklyHardJC0;
    throw Error(ErrorCode::InvalidSpec, "unknown policy '" + std::string(name) + "'");
}

const TaskVerdict& AnalysisReport::at(TaskId id) const {
    auto it = std::find_if(tasks.begin(), tasks.end(),
                           [id](const TaskVerdict& v) { return v.id == id; });
    if (it == tasks.end()) {
        throw Error(ErrorCode::InvalidTaskSet, "report has no task " + std::to_string(id));
    }
    return *it;
}

WorkloadTerms baseline_workload(const Task& t, Ticks response_bound, Ticks slack, Ticks interval) {
    return bound_with_period(t.wcet, t.period, response_bound, slack, interval);
}

WorkloadTerms wh_workload(const Task& t, Ticks response_bound, Ticks slack, Ticks interval) {
    switch (classify(t.constraint)) {
        case ToleranceClass::Hard:
            return baseline_workload(t, response_bound, slack, interval);
        case ToleranceClass::High: {
            const auto wh = derive_wh(t.constraint);
            return bound_with_period(t.wcet, static_cast<Ticks>(wh.w + 1) * t.period,
                                     response_bound, slack, interval);
        }
        case ToleranceClass::Low:
            break;
    }

    const auto wh = derive_wh(t.constraint);
    const auto h = static_cast<Ticks>(wh.h);
    WorkloadTerms w;
    const Ticks span = interval + response_bound - t.wcet - slack;
    Ticks remainder = 0;
    if (span > 0) {
        w.jobs = span / t.period;
        w.excluded = span / (t.period * (h + 1));
        remainder = span - w.jobs * t.period;
    }
    w.carry_out = 1 - (w.jobs % (h + 1)) / h;
    w.workload = (w.jobs - w.excluded) * t.wcet + w.carry_out * std::min(t.wcet, remainder);
    return w;
}

TaskVerdict response_time(std::size_t k, const TaskSet& ts, std::uint32_t cores,
                          InterferencePolicy policy, const JobClassTable* table,
                          std::span<const Ticks> known_bounds) {
    if (cores < 1) throw Error(ErrorCode::InvalidConfig, "core count must be at least 1");
    if (k >= ts.size() || known_bounds.size() != ts.size()) {
        throw Error(ErrorCode::InvalidConfig, "task index or bound vector does not match the set");
    }
    const auto interferers = interferers_of(k, ts, policy, table);
    return fixed_point(k, ts, cores, policy, interferers, known_bounds);
}

AnalysisReport analyze(const TaskSet& ts, std::uint32_t cores, InterferencePolicy policy,
                       bool stop_at_first_failure) {
    if (ts.empty()) throw Error(ErrorCode::EmptyTaskSet, "cannot analyze an empty task set");
    if (cores < 1) throw Error(ErrorCode::InvalidConfig, "core count must be at least 1");

    const JobClassTable table = assign_priorities(ts);
    AnalysisReport report;
    report.tasks.reserve(ts.size());
    for (const auto& t : ts) report.tasks.push_back(unanalyzed(t));

    // A task not yet analyzed, or found unschedulable, interferes as if its
    // jobs could run up to their deadline.
    std::vector<Ticks> bounds(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) bounds[i] = ts[i].deadline;

    if (policy != InterferencePolicy::GlobalEDF) {
        // Top job-class priorities follow the deadline order, so one sweep in
        // that order serves both fixed-priority analyses.
        report.rounds = 1;
        for (std::size_t k : table.order) {
            const auto hp = interferers_of(k, ts, policy, &table);
            report.tasks[k] = fixed_point(k, ts, cores, policy, hp, bounds);
            bounds[k] = std::min(report.tasks[k].response_bound, ts[k].deadline);
            if (stop_at_first_failure && !report.tasks[k].schedulable) break;
        }
    } else {
        std::vector<std::vector<std::size_t>> others(ts.size());
        for (std::size_t k = 0; k < ts.size(); ++k) others[k] = interferers_of(k, ts, policy, &table);
        for (;;) {
            ++report.rounds;
            bool slack_changed = false;
            bool newly_schedulable = false;
            for (std::size_t k : table.order) {
                const TaskVerdict v = fixed_point(k, ts, cores, policy, others[k], bounds);
                if (v.schedulable && !report.tasks[k].schedulable) newly_schedulable = true;
                if (v.slack != report.tasks[k].slack) slack_changed = true;
                report.tasks[k] = v;
                bounds[k] = std::min(v.response_bound, ts[k].deadline);
            }
            if (!slack_changed || !newly_schedulable) break;
        }
    }

    report.schedulable = std::all_of(report.tasks.begin(), report.tasks.end(),
                                     [](const TaskVerdict& v) { return v.schedulable; });
    return report;
}

}  // namespace whrt
