#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "whrt/model.hpp"
#include "whrt/priority.hpp"

namespace whrt {

// Terms of the workload bound of one interfering task over an interval L.
struct WorkloadTerms {
    Ticks jobs = 0;      // N: carry-in and body jobs
    Ticks excluded = 0;  // O: jobs known to run below the task's top class
    Ticks carry_out = 1; // a: 1 if the carry-out job is counted
    Ticks workload = 0;  // W

    friend bool operator==(const WorkloadTerms&, const WorkloadTerms&) = default;
};

enum class InterferencePolicy { FixedPriorityRM, GlobalEDF, WeaklyHardJC0 };

std::string_view to_string(InterferencePolicy p) noexcept;
// Accepts "rm", "edf", "wh"; throws InvalidSpec otherwise.
InterferencePolicy parse_policy(std::string_view name);

// Carry-in/body/carry-out bound with slack:
//   x = L + R - C - s, N = floor(x / T), W = N C + min(C, x - N T),
// where negative x clamps every term to zero.
WorkloadTerms baseline_workload(const Task& t, Ticks response_bound, Ticks slack, Ticks interval);

// Workload of the top job-class only. Hard tasks use the baseline bound;
// high-tolerance tasks use the baseline bound with period (w + 1) T;
// low-tolerance tasks drop O = floor(x / (T (h + 1))) jobs and the carry-out
// job when N mod (h + 1) = h.
WorkloadTerms wh_workload(const Task& t, Ticks response_bound, Ticks slack, Ticks interval);

struct TaskVerdict {
    TaskId id = 0;
    Ticks response_bound = 0;  // D + 1 when the iteration passed the deadline
    Ticks slack = 0;
    bool schedulable = false;
};

struct AnalysisReport {
    std::vector<TaskVerdict> tasks;  // task-set order
    bool schedulable = false;
    std::size_t rounds = 0;          // outer refinement rounds (1 for fixed-priority policies)

    const TaskVerdict& at(TaskId id) const;
};

// Fixed point R <- C + floor(sum_i min(W_i(R), R - C + 1) / cores) for the
// task at index k, starting at R = C and stopping once R exceeds D.
// Interferers: tasks before k in deadline order (RM), every other task (EDF),
// or tasks whose top job-class outranks k's (WH; `table` required).
// `known_bounds[i]` is the response bound currently known for task i; values
// above D_i are treated as D_i since unfinished jobs are killed at their deadline.
TaskVerdict response_time(std::size_t k, const TaskSet& ts, std::uint32_t cores,
                          InterferencePolicy policy, const JobClassTable* table,
                          std::span<const Ticks> known_bounds);

// Whole-set analysis. Fixed-priority policies make one pass in priority order;
// EDF starts from R_i = D_i and repeats until no slack changes or a round adds
// no schedulable task. With stop_at_first_failure the fixed-priority pass ends
// at the first unschedulable task (remaining verdicts stay unschedulable).
AnalysisReport analyze(const TaskSet& ts, std::uint32_t cores, InterferencePolicy policy,
                       bool stop_at_first_failure = false);

}  // namespace whrt
