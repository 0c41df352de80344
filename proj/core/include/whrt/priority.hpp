#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "whrt/model.hpp"
#include "whrt/sequences.hpp"

namespace whrt {

using Priority = std::uint32_t;

// Job-class priorities for every task. Larger value = higher priority;
// priorities are distinct across the whole set and span [1, total].
struct JobClassTable {
    // priorities[i][q]: priority of job-class q of the task at index i of the
    // task set the table was built from.
    std::vector<std::vector<Priority>> priorities;
    // Task indices in ascending (D, m, id) order.
    std::vector<std::size_t> order;
    Priority total = 0;

    std::size_t size() const noexcept { return priorities.size(); }
    std::uint32_t class_count(std::size_t task_index) const {
        return static_cast<std::uint32_t>(priorities.at(task_index).size());
    }
    Priority priority(std::size_t task_index, std::uint32_t q) const {
        return priorities.at(task_index).at(q);
    }
    Priority top_priority(std::size_t task_index) const { return priority(task_index, 0); }

    // True iff the table has one row per task with the expected class count.
    bool consistent_with(const TaskSet& ts) const;
};

// Task indices sorted by ascending deadline, then fewer tolerated misses,
// then smaller id.
std::vector<std::size_t> deadline_order(const TaskSet& ts);

// Priority assignment to job-classes: q-major sweep over the deadline order,
// handing out priorities from the total count downwards. Hard tasks own one
// class. Throws EmptyTaskSet.
JobClassTable assign_priorities(const TaskSet& ts);

// Runtime job-level of one task. `level` selects the next job-class via
// q = max(0, level); `miss_streak` counts consecutive misses since the last hit
// or restore.
struct JobLevelState {
    std::int64_t level = 0;
    std::uint32_t miss_streak = 0;

    std::uint32_t class_index() const noexcept {
        return level > 0 ? static_cast<std::uint32_t>(level) : 0u;
    }

    friend bool operator==(const JobLevelState&, const JobLevelState&) = default;
};

// level = -(h - 1), no misses counted.
JobLevelState initial_job_level(const MKTransform& t) noexcept;

// Hit: level rises by one up to max_level (= K - m), streak clears.
// Miss: streak grows; on reaching w the level is restored to -(h - 1).
JobLevelState advance_job_level(JobLevelState s, const MKTransform& t, std::uint32_t max_level,
                                Outcome outcome) noexcept;

// Per-task job-level tracker that also covers hard tasks, which stay at q = 0.
class JobLevelAutomaton {
public:
    explicit JobLevelAutomaton(const WeaklyHardConstraint& c);

    std::uint32_t class_index() const noexcept { return state_.class_index(); }
    const JobLevelState& state() const noexcept { return state_; }
    void record(Outcome outcome) noexcept;

private:
    std::optional<MKTransform> transform_;
    std::uint32_t max_level_ = 0;
    JobLevelState state_{};
};

}  // namespace whrt
