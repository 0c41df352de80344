#include "whrt/model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace whrt {

namespace {

std::string describe(std::uint32_t m, std::uint32_t k) {
    return "(" + std::to_string(m) + "," + std::to_string(k) + ")";
}

}  // namespace

WeaklyHardConstraint::WeaklyHardConstraint(std::uint32_t misses, std::uint32_t window)
    : misses_(misses), window_(window) {
    if (window_ < 1 || misses_ >= window_) {
        throw Error(ErrorCode::InvalidConstraint,
                    "constraint " + describe(misses, window) + " requires 0 <= m < K");
    }
    if (misses_ == 0 && window_ != 1) {
        throw Error(ErrorCode::InvalidConstraint,
                    "hard constraint must be written (0,1), got " + describe(misses, window));
    }
}

std::string to_string(ToleranceClass c) {
    switch (c) {
        case ToleranceClass::Hard: return "hard";
        case ToleranceClass::Low: return "low";
        case ToleranceClass::High: return "high";
    }
    return "unknown";
}

Task::Task(TaskId id_, Ticks wcet_, Ticks deadline_, Ticks period_,
           WeaklyHardConstraint constraint_)
    : id(id_), wcet(wcet_), deadline(deadline_), period(period_), constraint(constraint_) {
    if (!(1 <= wcet && wcet <= deadline && deadline <= period)) {
        throw Error(ErrorCode::InvalidTask,
                    "task " + std::to_string(id) + " violates 1 <= C <= D <= T (C=" +
                        std::to_string(wcet) + ", D=" + std::to_string(deadline) +
                        ", T=" + std::to_string(period) + ")");
    }
}

TaskSet::TaskSet(std::vector<Task> tasks) : tasks_(std::move(tasks)) {
    std::unordered_set<TaskId> seen;
    for (const auto& t : tasks_) {
        if (!seen.insert(t.id).second) {
            throw Error(ErrorCode::InvalidTaskSet, "duplicate task id " + std::to_string(t.id));
        }
    }
}

double TaskSet::utilization() const noexcept {
    return std::accumulate(tasks_.begin(), tasks_.end(), 0.0,
                           [](double acc, const Task& t) { return acc + t.utilization(); });
}

std::size_t TaskSet::index_of(TaskId id) const {
    auto it = std::find_if(tasks_.begin(), tasks_.end(), [id](const Task& t) { return t.id == id; });
    if (it == tasks_.end()) {
        throw Error(ErrorCode::InvalidTaskSet, "no task with id " + std::to_string(id));
    }
    return static_cast<std::size_t>(it - tasks_.begin());
}

ToleranceClass classify(const WeaklyHardConstraint& c) noexcept {
    if (c.is_hard()) return ToleranceClass::Hard;
    return 2 * static_cast<std::uint64_t>(c.misses()) < c.window() ? ToleranceClass::Low
                                                                    : ToleranceClass::High;
}

MKTransform derive_wh(const WeaklyHardConstraint& c) {
    if (c.is_hard()) {
        throw Error(ErrorCode::HardTaskHasNoTransform, "hard constraint has no (w,h) transform");
    }
    const std::uint32_t m = c.misses();
    const std::uint32_t hits = c.window() - m;
    return MKTransform{std::max(m / hits, 1u), (hits + m - 1) / m};
}

Task equivalent_task(const Task& t) {
    if (classify(t.constraint) != ToleranceClass::High) {
        throw Error(ErrorCode::NotHighTolerance,
                    "task " + std::to_string(t.id) + " is not high-tolerance");
    }
    const auto wh = derive_wh(t.constraint);
    return Task(t.id, t.wcet, t.deadline, static_cast<Ticks>(wh.w + 1) * t.period,
                WeaklyHardConstraint::hard());
}

bool harder_than(std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t q) {
    if (!(0 <= a && a <= b && b >= 1 && 0 <= p && p <= q && q >= 1)) {
        throw Error(ErrorCode::InvalidConstraint,
                    "harder_than requires 0 <= a <= b, 0 <= p <= q, b >= 1, q >= 1");
    }
    const std::int64_t whole = q / b;
    const std::int64_t ceil = (q + b - 1) / b;
    return p <= std::max(whole * a, q + ceil * (a - b));
}

}  // namespace whrt
