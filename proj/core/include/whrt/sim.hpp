#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "whrt/model.hpp"
#include "whrt/priority.hpp"
#include "whrt/sequences.hpp"

namespace whrt {

enum class SchedulingPolicy { JobClass, RM, EDF };
enum class ReleaseModel { Synchronous, SporadicJitter };
enum class ExecutionModel { AlwaysWCET, UniformUpToWCET };

std::string_view to_string(SchedulingPolicy p) noexcept;

struct SimConfig {
    std::uint32_t cores = 1;
    Ticks horizon = 0;
    ReleaseModel release = ReleaseModel::Synchronous;
    Ticks max_jitter = 0;  // SporadicJitter: inter-arrival is T + U[0, max_jitter]
    ExecutionModel execution = ExecutionModel::AlwaysWCET;
    SchedulingPolicy policy = SchedulingPolicy::JobClass;
    std::uint64_t seed = 0;
    bool record_jobs = true;
    bool record_events = false;
};

struct JobRecord {
    TaskId task = 0;
    std::uint64_t index = 0;  // release order within the task
    Ticks release = 0;
    Ticks deadline = 0;       // absolute
    Ticks demand = 0;         // execution time drawn for this job
    Ticks executed = 0;
    std::optional<Ticks> finish;  // empty when killed
    std::uint32_t job_class = 0;
    Outcome outcome = Outcome::Miss;

    bool killed() const noexcept { return !finish.has_value(); }
};

enum class EventKind { Release, Complete, Kill };

struct SimEvent {
    Ticks time;
    EventKind kind;
    TaskId task;
    std::uint64_t job;
};

struct TaskTrace {
    TaskId id = 0;
    // Jobs whose absolute deadline is within the horizon, in release order.
    DeadlineSequence outcomes;
    std::vector<std::uint32_t> classes;  // job-class at release, parallel to outcomes
    std::vector<JobRecord> jobs;         // filled when SimConfig::record_jobs
};

struct SimTrace {
    Ticks horizon = 0;
    std::vector<TaskTrace> tasks;  // task-set order
    std::vector<SimEvent> events;  // filled when SimConfig::record_events

    const TaskTrace& of(TaskId id) const;
};

// Preemptive global scheduling on `cores` identical cores with full
// migration. At each release, completion and deadline the highest-priority
// ready jobs run; an unfinished job is killed at its absolute deadline.
// JobClass uses table[task][q] with q from each task's job-level; RM uses each
// task's top-class priority; EDF uses the earliest absolute deadline. Equal
// keys go to the lower task id. Throws InvalidConfig.
SimTrace simulate(const TaskSet& ts, const JobClassTable& table, const SimConfig& cfg);

struct Violation {
    enum class Kind { Window, TopClassMiss };
    Kind kind;
    TaskId task;
    std::size_t index;  // window start (Window) or job position (TopClassMiss)
};

// Every K-window of each task's outcomes against (m, K), plus every miss of
// a job released in job-class 0.
std::vector<Violation> check_trace(const SimTrace& trace, const TaskSet& ts);

// Least common multiple of all periods, saturating at `cap`.
Ticks hyperperiod(const TaskSet& ts, Ticks cap);

}  // namespace whrt
