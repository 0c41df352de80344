#include "whrt/sim.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "whrt/random.hpp"

namespace whrt {

namespace {

constexpr Ticks kNever = std::numeric_limits<Ticks>::max();

struct ActiveJob {
    std::uint64_t index = 0;
    Ticks release = 0;
    Ticks deadline = 0;
    Ticks demand = 0;
    Ticks remaining = 0;
    std::uint32_t job_class = 0;
    Priority priority = 0;
};

struct TaskState {
    std::optional<ActiveJob> job;
    Ticks next_release = 0;
    std::uint64_t released = 0;
    JobLevelAutomaton level;
    Rng release_rng;
    Rng exec_rng;
};

void validate(const TaskSet& ts, const JobClassTable& table, const SimConfig& cfg) {
    if (cfg.cores < 1) throw Error(ErrorCode::InvalidConfig, "core count must be at least 1");
    if (cfg.horizon < 1) throw Error(ErrorCode::InvalidConfig, "horizon must be at least 1 tick");
    if (cfg.max_jitter < 0) throw Error(ErrorCode::InvalidConfig, "jitter must be non-negative");
    if (ts.empty()) throw Error(ErrorCode::EmptyTaskSet, "cannot simulate an empty task set");
    if (!table.consistent_with(ts)) {
        throw Error(ErrorCode::InvalidConfig, "job-class table does not match the task set");
    }
}

}  // namespace

std::string_view to_string(SchedulingPolicy p) noexcept {
    switch (p) {
        case SchedulingPolicy::JobClass: return "jobclass";
        case SchedulingPolicy::RM: return "rm";
        case SchedulingPolicy::EDF: return "edf";
    }
    return "unknown";
}

const TaskTrace& SimTrace::of(TaskId id) const {
    auto it = std::find_if(tasks.begin(), tasks.end(),
                           [id](const TaskTrace& t) { return t.id == id; });
    if (it == tasks.end()) {
        throw Error(ErrorCode::InvalidTaskSet, "trace has no task " + std::to_string(id));
    }
    return *it;
}

SimTrace simulate(const TaskSet& ts, const JobClassTable& table, const SimConfig& cfg) {
    validate(ts, table, cfg);
    const std::size_t n = ts.size();

    SimTrace trace;
    trace.horizon = cfg.horizon;
    trace.tasks.resize(n);

    std::vector<TaskState> state;
    state.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t base = mix_seed(cfg.seed ^ mix_seed(i));
        state.push_back(TaskState{std::nullopt, 0, 0, JobLevelAutomaton(ts[i].constraint),
                                  Rng(mix_seed(base + 1)), Rng(mix_seed(base + 2))});
        trace.tasks[i].id = ts[i].id;
        if (cfg.release == ReleaseModel::SporadicJitter && cfg.max_jitter > 0) {
            state[i].next_release = state[i].release_rng.uniform_int(0, cfg.max_jitter);
        }
    }

    auto log = [&](Ticks t, EventKind kind, std::size_t i, std::uint64_t job) {
        if (cfg.record_events) trace.events.push_back(SimEvent{t, kind, ts[i].id, job});
    };

    auto resolve = [&](std::size_t i, Ticks now, bool finished) {
        TaskState& st = state[i];
        const ActiveJob& job = *st.job;
        const Outcome outcome = finished ? Outcome::Hit : Outcome::Miss;
        log(now, finished ? EventKind::Complete : EventKind::Kill, i, job.index);
        if (job.deadline <= cfg.horizon) {
            TaskTrace& tt = trace.tasks[i];
            tt.outcomes.push_back(outcome);
            tt.classes.push_back(job.job_class);
            if (cfg.record_jobs) {
                JobRecord rec;
                rec.task = ts[i].id;
                rec.index = job.index;
                rec.release = job.release;
                rec.deadline = job.deadline;
                rec.demand = job.demand;
                rec.executed = job.demand - job.remaining;
                if (finished) rec.finish = now;
                rec.job_class = job.job_class;
                rec.outcome = outcome;
                tt.jobs.push_back(rec);
            }
        }
        st.level.record(outcome);
        st.job.reset();
    };

    // Strict "runs before" order among active jobs.
    auto outranks = [&](std::size_t a, std::size_t b) {
        const ActiveJob& ja = *state[a].job;
        const ActiveJob& jb = *state[b].job;
        if (cfg.policy == SchedulingPolicy::EDF) {
            if (ja.deadline != jb.deadline) return ja.deadline < jb.deadline;
        } else if (ja.priority != jb.priority) {
            return ja.priority > jb.priority;
        }
        return ts[a].id < ts[b].id;
    };

    std::vector<std::size_t> ready;
    ready.reserve(n);
    Ticks now = 0;
    for (;;) {
        // Completions precede deadline kills at the same instant, so a job
        // finishing exactly at its deadline is a hit.
        for (std::size_t i = 0; i < n; ++i) {
            if (state[i].job && state[i].job->remaining == 0) resolve(i, now, true);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (state[i].job && state[i].job->deadline == now) resolve(i, now, false);
        }
        for (std::size_t i = 0; i < n; ++i) {
            TaskState& st = state[i];
            if (st.next_release != now || now >= cfg.horizon) continue;
            const Task& task = ts[i];
            ActiveJob job;
            job.index = st.released++;
            job.release = now;
            job.deadline = now + task.deadline;
            job.demand = cfg.execution == ExecutionModel::UniformUpToWCET
                             ? st.exec_rng.uniform_int(1, task.wcet)
                             : task.wcet;
            job.remaining = job.demand;
            job.job_class = cfg.policy == SchedulingPolicy::JobClass ? st.level.class_index() : 0;
            job.priority = table.priority(i, job.job_class);
            st.job = job;
            log(now, EventKind::Release, i, job.index);

            Ticks gap = task.period;
            if (cfg.release == ReleaseModel::SporadicJitter && cfg.max_jitter > 0) {
                gap += st.release_rng.uniform_int(0, cfg.max_jitter);
            }
            st.next_release = now + gap;
        }

        ready.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (state[i].job) ready.push_back(i);
        }
        const std::size_t run_count = std::min<std::size_t>(ready.size(), cfg.cores);
        std::partial_sort(ready.begin(), ready.begin() + static_cast<std::ptrdiff_t>(run_count),
                          ready.end(), outranks);

        Ticks next = kNever;
        for (std::size_t r = 0; r < run_count; ++r) {
            next = std::min(next, now + state[ready[r]].job->remaining);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (state[i].job) next = std::min(next, state[i].job->deadline);
            if (state[i].next_release < cfg.horizon) next = std::min(next, state[i].next_release);
        }
        if (next == kNever || next > cfg.horizon) break;

        const Ticks dt = next - now;
        for (std::size_t r = 0; r < run_count; ++r) state[ready[r]].job->remaining -= dt;
        now = next;
    }
    return trace;
}

std::vector<Violation> check_trace(const SimTrace& trace, const TaskSet& ts) {
    std::vector<Violation> out;
    for (const TaskTrace& tt : trace.tasks) {
        const Task& task = ts[ts.index_of(tt.id)];
        const std::size_t k = task.constraint.window();
        const std::size_t m = task.constraint.misses();
        const auto seq = tt.outcomes.outcomes();

        for (std::size_t j = 0; j < tt.classes.size() && j < seq.size(); ++j) {
            if (tt.classes[j] == 0 && seq[j] == Outcome::Miss) {
                out.push_back(Violation{Violation::Kind::TopClassMiss, tt.id, j});
            }
        }
        if (seq.size() < k) continue;
        std::size_t misses = static_cast<std::size_t>(
            std::count(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k), Outcome::Miss));
        for (std::size_t start = 0;; ++start) {
            if (misses > m) out.push_back(Violation{Violation::Kind::Window, tt.id, start});
            if (start + k >= seq.size()) break;
            misses -= seq[start] == Outcome::Miss;
            misses += seq[start + k] == Outcome::Miss;
        }
    }
    return out;
}

Ticks hyperperiod(const TaskSet& ts, Ticks cap) {
    Ticks h = 1;
    for (const auto& t : ts) {
        const Ticks g = std::gcd(h, t.period);
        const Ticks factor = t.period / g;
        if (h > cap / factor) return cap;
        h *= factor;
    }
    return std::min(h, cap);
}

}  // namespace whrt
