#pragma once

#include <cstdint>
#include <vector>

#include "whrt/model.hpp"

namespace whrt {

enum class Scenario { AllLow, AllHigh };

std::string to_string(Scenario s);

struct GenSpec {
    std::uint32_t tasks = 20;
    double utilization = 1.0;
    Ticks min_period = 10;
    Ticks max_period = 1000;
    std::uint32_t window = 5;
    Scenario scenario = Scenario::AllLow;
    std::uint64_t seed = 0;
};

// Throws InvalidSpec on n = 0, U <= 0, Tmin < 2, Tmin > Tmax, or K too small
// for the scenario to have any admissible m; Infeasible when U > n.
void validate(const GenSpec& spec);

// UUnifast split of `total` into n shares, each at most 1 (vectors with a
// larger share are redrawn). total = n returns all ones. Throws Infeasible if
// total > n or no admissible vector is found within the resampling budget.
std::vector<double> uunifast(std::uint32_t n, double total, std::uint64_t seed);

// Implicit-deadline set: log-uniform integer periods, C = clamp(round(U_i T_i), 1, T_i),
// m uniform in [1, ceil(K/2) - 1] (AllLow) or [ceil(K/2), K - 1] (AllHigh).
TaskSet make_taskset(const GenSpec& spec);

}  // namespace whrt
