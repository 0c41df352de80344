#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "whrt/error.hpp"

namespace whrt {

// Time, execution budgets and periods are integral ticks. The type is signed so
// intermediate interval arithmetic may go below zero before clamping; every
// stored task parameter is validated to be positive.
using Ticks = std::int64_t;

using TaskId = std::uint32_t;

// (m, K): at most m deadline misses in any window of K consecutive jobs.
// A hard real-time task is exactly (0, 1).
class WeaklyHardConstraint {
public:
    WeaklyHardConstraint(std::uint32_t misses, std::uint32_t window);

    static WeaklyHardConstraint hard() { return {0, 1}; }

    std::uint32_t misses() const noexcept { return misses_; }
    std::uint32_t window() const noexcept { return window_; }
    bool is_hard() const noexcept { return misses_ == 0; }

    // Number of job-classes a task with this constraint owns.
    std::uint32_t job_class_count() const noexcept {
        return is_hard() ? 1 : window_ - misses_ + 1;
    }

    friend bool operator==(const WeaklyHardConstraint&, const WeaklyHardConstraint&) = default;

private:
    std::uint32_t misses_;
    std::uint32_t window_;
};

enum class ToleranceClass { Hard, Low, High };

std::string to_string(ToleranceClass c);

// Critical-sequence parameters: at most `w` consecutive misses, then at least
// `h` consecutive hits.
struct MKTransform {
    std::uint32_t w;
    std::uint32_t h;

    std::uint32_t window() const noexcept { return w + h; }

    friend bool operator==(const MKTransform&, const MKTransform&) = default;
};

struct Task {
    TaskId id;
    Ticks wcet;      // C
    Ticks deadline;  // D
    Ticks period;    // T
    WeaklyHardConstraint constraint;

    // Throws InvalidTask unless 1 <= C <= D <= T.
    Task(TaskId id, Ticks wcet, Ticks deadline, Ticks period,
         WeaklyHardConstraint constraint = WeaklyHardConstraint::hard());

    double utilization() const noexcept {
        return static_cast<double>(wcet) / static_cast<double>(period);
    }

    friend bool operator==(const Task&, const Task&) = default;
};

class TaskSet {
public:
    TaskSet() = default;
    // Throws InvalidTaskSet on duplicate ids.
    explicit TaskSet(std::vector<Task> tasks);

    std::span<const Task> tasks() const noexcept { return tasks_; }
    std::size_t size() const noexcept { return tasks_.size(); }
    bool empty() const noexcept { return tasks_.empty(); }
    const Task& operator[](std::size_t i) const { return tasks_[i]; }

    double utilization() const noexcept;

    // Index of the task with the given id; throws InvalidTaskSet if absent.
    std::size_t index_of(TaskId id) const;

    auto begin() const noexcept { return tasks_.begin(); }
    auto end() const noexcept { return tasks_.end(); }

private:
    std::vector<Task> tasks_;
};

// Exact classification: Low iff 0 < 2m < K, High iff 2m >= K, Hard iff m = 0.
ToleranceClass classify(const WeaklyHardConstraint& c) noexcept;

// w = max(floor(m / (K - m)), 1), h = ceil((K - m) / m).
// Throws HardTaskHasNoTransform when m = 0.
MKTransform derive_wh(const WeaklyHardConstraint& c);

// High-tolerance tasks only: same C, D and id, period (w + 1) T, hard constraint.
Task equivalent_task(const Task& t);

// Hit-constraint dominance: "at least a hits in any b" is harder than
// "at least p hits in any q" iff p <= max(floor(q/b) a, q + ceil(q/b) (a - b)).
// Throws InvalidConstraint unless 0 <= a <= b, 0 <= p <= q, b >= 1, q >= 1.
bool harder_than(std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t q);

}  // namespace whrt
