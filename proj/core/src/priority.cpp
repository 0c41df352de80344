#include "whrt/priority.hpp"

#include <algorithm>
#include <numeric>

namespace whrt {

bool JobClassTable::consistent_with(const TaskSet& ts) const {
    if (priorities.size() != ts.size() || order.size() != ts.size()) return false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (priorities[i].size() != ts[i].constraint.job_class_count()) return false;
    }
    return true;
}

std::vector<std::size_t> deadline_order(const TaskSet& ts) {
    std::vector<std::size_t> order(ts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&ts](std::size_t a, std::size_t b) {
        const Task& x = ts[a];
        const Task& y = ts[b];
        if (x.deadline != y.deadline) return x.deadline < y.deadline;
        if (x.constraint.misses() != y.constraint.misses()) {
            return x.constraint.misses() < y.constraint.misses();
        }
        return x.id < y.id;
    });
    return order;
}

JobClassTable assign_priorities(const TaskSet& ts) {
    if (ts.empty()) throw Error(ErrorCode::EmptyTaskSet, "cannot assign priorities to an empty set");

    JobClassTable table;
    table.order = deadline_order(ts);
    table.priorities.resize(ts.size());

    std::uint32_t max_classes = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::uint32_t classes = ts[i].constraint.job_class_count();
        table.priorities[i].resize(classes);
        table.total += classes;
        max_classes = std::max(max_classes, classes);
    }

    Priority next = table.total;
    for (std::uint32_t q = 0; q < max_classes; ++q) {
        for (std::size_t idx : table.order) {
            auto& row = table.priorities[idx];
            if (q < row.size()) row[q] = next--;
        }
    }
    return table;
}

JobLevelState initial_job_level(const MKTransform& t) noexcept {
    return JobLevelState{-(static_cast<std::int64_t>(t.h) - 1), 0};
}

JobLevelState advance_job_level(JobLevelState s, const MKTransform& t, std::uint32_t max_level,
                                Outcome outcome) noexcept {
    if (outcome == Outcome::Hit) {
        s.level = std::min<std::int64_t>(s.level + 1, max_level);
        s.miss_streak = 0;
        return s;
    }
    s.miss_streak += 1;
    if (s.miss_streak >= t.w) return initial_job_level(t);
    return s;
}

JobLevelAutomaton::JobLevelAutomaton(const WeaklyHardConstraint& c) {
    if (c.is_hard()) return;
    transform_ = derive_wh(c);
    max_level_ = c.window() - c.misses();
    state_ = initial_job_level(*transform_);
}

void JobLevelAutomaton::record(Outcome outcome) noexcept {
    if (!transform_) return;
    state_ = advance_job_level(state_, *transform_, max_level_, outcome);
}

}  // namespace whrt
