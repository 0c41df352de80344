#include "whrt/gen.hpp"

#include <algorithm>
#include <cmath>

#include "whrt/random.hpp"

namespace whrt {

namespace {

constexpr int kMaxResamples = 100000;

struct MissRange {
    std::uint32_t lo;
    std::uint32_t hi;
};

MissRange miss_range(std::uint32_t window, Scenario s) {
    const std::uint32_t half = (window + 1) / 2;
    if (s == Scenario::AllLow) return {1, half - 1};
    return {half, window - 1};
}

}  // namespace

std::string to_string(Scenario s) { return s == Scenario::AllLow ? "low" : "high"; }

void validate(const GenSpec& spec) {
    if (spec.tasks < 1) throw Error(ErrorCode::InvalidSpec, "task count must be at least 1");
    if (!(spec.utilization > 0.0)) throw Error(ErrorCode::InvalidSpec, "utilization must be positive");
    if (spec.utilization > static_cast<double>(spec.tasks)) {
        throw Error(ErrorCode::Infeasible, "utilization exceeds the task count");
    }
    if (spec.min_period < 2 || spec.min_period > spec.max_period) {
        throw Error(ErrorCode::InvalidSpec, "period range needs 2 <= Tmin <= Tmax");
    }
    if (spec.window < 2) throw Error(ErrorCode::InvalidSpec, "window K must be at least 2");
    const auto r = miss_range(spec.window, spec.scenario);
    if (r.lo > r.hi) {
        throw Error(ErrorCode::InvalidSpec, "no " + to_string(spec.scenario) +
                                                "-tolerance m exists for K=" +
                                                std::to_string(spec.window));
    }
}

std::vector<double> uunifast(std::uint32_t n, double total, std::uint64_t seed) {
    if (n < 1 || !(total > 0.0)) throw Error(ErrorCode::InvalidSpec, "uunifast needs n >= 1, U > 0");
    if (total > static_cast<double>(n)) {
        throw Error(ErrorCode::Infeasible, "utilization exceeds the task count");
    }
    if (total == static_cast<double>(n)) return std::vector<double>(n, 1.0);

    Rng rng(seed);
    std::vector<double> u(n);
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        double remaining = total;
        for (std::uint32_t i = 0; i + 1 < n; ++i) {
            const double next =
                remaining * std::pow(rng.uniform_real(), 1.0 / static_cast<double>(n - i - 1));
            u[i] = remaining - next;
            remaining = next;
        }
        u[n - 1] = remaining;
        if (std::all_of(u.begin(), u.end(), [](double x) { return x <= 1.0; })) return u;
    }
    throw Error(ErrorCode::Infeasible, "uunifast found no vector with every share <= 1");
}

TaskSet make_taskset(const GenSpec& spec) {
    validate(spec);
    const auto shares = uunifast(spec.tasks, spec.utilization, mix_seed(spec.seed));
    Rng rng(mix_seed(spec.seed ^ 0x5eedULL));

    const double log_lo = std::log(static_cast<double>(spec.min_period));
    const double log_hi = std::log(static_cast<double>(spec.max_period));
    const auto range = miss_range(spec.window, spec.scenario);

    std::vector<Task> tasks;
    tasks.reserve(spec.tasks);
    for (std::uint32_t i = 0; i < spec.tasks; ++i) {
        const double x = std::exp(log_lo + (log_hi - log_lo) * rng.uniform_real());
        const Ticks period =
            std::clamp<Ticks>(std::llround(x), spec.min_period, spec.max_period);
        const Ticks wcet =
            std::clamp<Ticks>(std::llround(shares[i] * static_cast<double>(period)), 1, period);
        const auto m = static_cast<std::uint32_t>(rng.uniform_int(range.lo, range.hi));
        tasks.emplace_back(i, wcet, period, period, WeaklyHardConstraint(m, spec.window));
    }
    return TaskSet(std::move(tasks));
}

}  // namespace whrt
