// whrt: command-line front end for weakly-hard global scheduling analysis,
// simulation, task-set generation and the schedulability-ratio sweep.
//
// Exit codes: 0 success or schedulable, 1 unschedulable or trace violation,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "whrt/experiment.hpp"
#include "whrt/gen.hpp"
#include "whrt/io.hpp"
#include "whrt/priority.hpp"
#include "whrt/rta.hpp"
#include "whrt/sequences.hpp"
#include "whrt/sim.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailedCheck = 1;
constexpr int kUsage = 2;

constexpr whrt::Ticks kMaxDefaultHorizon = 1'000'000;

// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw whrt::Error(whrt::ErrorCode::IoError, "cannot write " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        stream().flush();
        if (!stream()) throw whrt::Error(whrt::ErrorCode::IoError, "write failed");
    }

private:
    std::ofstream file_;
};

whrt::Scenario parse_scenario(const std::string& s) {
    if (s == "low") return whrt::Scenario::AllLow;
    if (s == "high") return whrt::Scenario::AllHigh;
    throw whrt::Error(whrt::ErrorCode::InvalidSpec, "scenario must be low or high");
}

whrt::SchedulingPolicy sim_policy(const std::string& s) {
    switch (whrt::parse_policy(s)) {
        case whrt::InterferencePolicy::WeaklyHardJC0: return whrt::SchedulingPolicy::JobClass;
        case whrt::InterferencePolicy::FixedPriorityRM: return whrt::SchedulingPolicy::RM;
        case whrt::InterferencePolicy::GlobalEDF: return whrt::SchedulingPolicy::EDF;
    }
    return whrt::SchedulingPolicy::JobClass;
}

// "sync" or "jitter:N".
void parse_release(const std::string& s, whrt::SimConfig& cfg) {
    if (s == "sync") {
        cfg.release = whrt::ReleaseModel::Synchronous;
        return;
    }
    const std::string prefix = "jitter:";
    if (s.rfind(prefix, 0) == 0) {
        const std::string n = s.substr(prefix.size());
        if (!n.empty() && n.find_first_not_of("0123456789") == std::string::npos) {
            cfg.release = whrt::ReleaseModel::SporadicJitter;
            cfg.max_jitter = std::stoll(n);
            return;
        }
    }
    throw whrt::Error(whrt::ErrorCode::InvalidConfig, "release must be sync or jitter:N");
}

std::vector<whrt::InterferencePolicy> parse_policy_list(const std::string& list) {
    std::vector<whrt::InterferencePolicy> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(whrt::parse_policy(item));
    if (out.empty()) throw whrt::Error(whrt::ErrorCode::InvalidSpec, "empty policy list");
    return out;
}

std::vector<double> parse_u_list(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty()) {
            throw whrt::Error(whrt::ErrorCode::InvalidSpec, "bad utilization '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw whrt::Error(whrt::ErrorCode::InvalidSpec, "empty utilization list");
    return out;
}

// Rows printed by `count` without --m/--k.
const std::vector<std::pair<std::uint32_t, std::uint32_t>> kCostRows = {
    {1, 5}, {2, 5}, {3, 5}, {4, 5}, {4, 10}, {8, 10}, {8, 20}, {16, 20}};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weakly-hard (m,K) global multi-core scheduling toolkit"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    std::uint32_t cores = 4;
    std::string policy = "wh";
    std::uint64_t seed = 1;

    auto* analyze = app.add_subcommand("analyze", "Response-time analysis of a task-set file");
    std::string format = "csv";
    analyze->add_option("--in", in_path, "Task-set JSON file")->required();
    analyze->add_option("--out", out_path, "Output path (default stdout)");
    analyze->add_option("--cores", cores, "Core count")->check(CLI::PositiveNumber);
    analyze->add_option("--policy", policy, "rm | edf | wh");
    analyze->add_option("--format", format, "csv | text")->check(CLI::IsMember({"csv", "text"}));

    auto* simulate = app.add_subcommand("simulate", "Simulate the global scheduler");
    whrt::Ticks horizon = 0;
    std::string release = "sync";
    std::string exec = "wcet";
    simulate->add_option("--in", in_path, "Task-set JSON file")->required();
    simulate->add_option("--out", out_path, "Job trace CSV path (default stdout)");
    simulate->add_option("--cores", cores, "Core count")->check(CLI::PositiveNumber);
    simulate->add_option("--policy", policy, "wh (job-class) | rm | edf");
    simulate->add_option("--horizon", horizon,
                         "Simulated ticks (default min(3 * hyperperiod, 1e6))");
    simulate->add_option("--release", release, "sync | jitter:N");
    simulate->add_option("--exec", exec, "wcet | uniform")
        ->check(CLI::IsMember({"wcet", "uniform"}));
    simulate->add_option("--seed", seed, "Random seed");

    auto* generate = app.add_subcommand("generate", "Generate task-set files");
    whrt::GenSpec gen;
    std::string scenario = "low";
    std::uint32_t sets = 1;
    double target_u = 1.0;
    generate->add_option("--tasks", gen.tasks, "Tasks per set")->check(CLI::PositiveNumber);
    generate->add_option("--util", target_u, "Target total utilization");
    generate->add_option("--k", gen.window, "Window K");
    generate->add_option("--scenario", scenario, "low | high");
    generate->add_option("--tmin", gen.min_period, "Minimum period");
    generate->add_option("--tmax", gen.max_period, "Maximum period");
    generate->add_option("--sets", sets, "Number of sets (directory output when > 1)")
        ->check(CLI::PositiveNumber);
    generate->add_option("--seed", seed, "Master seed");
    generate->add_option("--out", out_path, "Output file, or directory when --sets > 1");

    auto* priorities = app.add_subcommand("priorities", "Print job-class priorities");
    priorities->add_option("--in", in_path, "Task-set JSON file")->required();
    priorities->add_option("--out", out_path, "Output path (default stdout)");

    auto* count = app.add_subcommand("count", "Transformation cost by sequence enumeration");
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    auto* m_opt = count->add_option("--m", m, "Tolerated misses");
    auto* k_opt = count->add_option("--k", k, "Window");
    m_opt->needs(k_opt);
    k_opt->needs(m_opt);
    count->add_option("--out", out_path, "Output path (default stdout)");

    auto* experiment = app.add_subcommand("experiment", "Schedulability-ratio sweep");
    whrt::ExperimentSpec spec;
    std::string u_list = "2.0,2.4,2.8,3.2,3.6,4.0,4.4";
    std::string policies = "rm,edf,wh";
    bool no_timing = false;
    spec.base.tasks = 20;
    experiment->add_option("--cores", cores, "Core count")->check(CLI::PositiveNumber);
    experiment->add_option("--tasks", spec.base.tasks, "Tasks per set")->check(CLI::PositiveNumber);
    experiment->add_option("--k", spec.base.window, "Window K");
    experiment->add_option("--scenario", scenario, "low | high");
    experiment->add_option("--sets", spec.sets_per_point, "Sets per utilization point")
        ->check(CLI::PositiveNumber);
    experiment->add_option("--u-list", u_list, "Comma-separated total utilizations");
    experiment->add_option("--policy", policies, "Comma-separated subset of rm,edf,wh");
    experiment->add_option("--tmin", spec.base.min_period, "Minimum period");
    experiment->add_option("--tmax", spec.base.max_period, "Maximum period");
    experiment->add_option("--seed", seed, "Master seed");
    experiment->add_option("--out", out_path, "CSV output path (default stdout)");
    experiment->add_flag("--no-timing", no_timing, "Write 0 for timing so output is reproducible");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) {
            const auto ts = whrt::load_taskset(in_path);
            const auto p = whrt::parse_policy(policy);
            const auto report = whrt::analyze(ts, cores, p);
            Output out(out_path);
            if (format == "csv") {
                whrt::write_report_csv(out.stream(), ts, report);
            } else {
                whrt::write_report_text(out.stream(), ts, report, p, cores);
            }
            out.finish();
            return report.schedulable ? kOk : kFailedCheck;
        }

        if (*simulate) {
            const auto ts = whrt::load_taskset(in_path);
            whrt::SimConfig cfg;
            cfg.cores = cores;
            cfg.policy = sim_policy(policy);
            cfg.seed = seed;
            cfg.execution = exec == "uniform" ? whrt::ExecutionModel::UniformUpToWCET
                                              : whrt::ExecutionModel::AlwaysWCET;
            parse_release(release, cfg);
            cfg.horizon = horizon > 0 ? horizon
                                      : std::min(3 * whrt::hyperperiod(ts, kMaxDefaultHorizon),
                                                 kMaxDefaultHorizon);
            const auto trace = whrt::simulate(ts, whrt::assign_priorities(ts), cfg);
            Output out(out_path);
            whrt::write_trace_csv(out.stream(), trace);
            out.finish();

            auto violations = whrt::check_trace(trace, ts);
            if (cfg.policy != whrt::SchedulingPolicy::JobClass) {
                // Every job of a task-level policy is in class 0; only windows matter.
                std::erase_if(violations, [](const whrt::Violation& v) {
                    return v.kind == whrt::Violation::Kind::TopClassMiss;
                });
            }
            std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
            whrt::write_outcome_strings(summary, trace);
            for (const auto& v : violations) {
                summary << "violation task " << v.task << ' '
                        << (v.kind == whrt::Violation::Kind::Window ? "window " : "class-0 job ")
                        << v.index << '\n';
            }
            return violations.empty() ? kOk : kFailedCheck;
        }

        if (*generate) {
            gen.scenario = parse_scenario(scenario);
            gen.utilization = target_u;
            if (sets == 1) {
                gen.seed = seed;
                const auto ts = whrt::make_taskset(gen);
                Output out(out_path);
                out.stream() << whrt::dump_taskset(ts);
                out.finish();
                return kOk;
            }
            if (out_path.empty()) {
                throw whrt::Error(whrt::ErrorCode::InvalidSpec, "--out directory required for --sets > 1");
            }
            std::filesystem::create_directories(out_path);
            for (std::uint32_t s = 0; s < sets; ++s) {
                gen.seed = seed ^ s;
                whrt::save_taskset(std::filesystem::path(out_path) / ("set_" + std::to_string(s) + ".json"),
                                   whrt::make_taskset(gen));
            }
            return kOk;
        }

        if (*priorities) {
            const auto ts = whrt::load_taskset(in_path);
            Output out(out_path);
            out.stream() << whrt::format_priority_table(ts, whrt::assign_priorities(ts));
            out.finish();
            return kOk;
        }

        if (*count) {
            Output out(out_path);
            if (*m_opt) {
                const auto r = whrt::transformation_cost(whrt::WeaklyHardConstraint(m, k));
                out.stream() << r.harder << '/' << r.original << ' ' << r.decimal() << '\n';
            } else {
                out.stream() << "m,K,w,w+h,harder,original,ratio\n";
                for (const auto& [rm, rk] : kCostRows) {
                    const whrt::WeaklyHardConstraint c(rm, rk);
                    const auto wh = whrt::derive_wh(c);
                    const auto r = whrt::transformation_cost(c);
                    out.stream() << rm << ',' << rk << ',' << wh.w << ',' << wh.window() << ','
                                 << r.harder << ',' << r.original << ',' << r.decimal() << '\n';
                }
            }
            out.finish();
            return kOk;
        }

        if (*experiment) {
            spec.base.scenario = parse_scenario(scenario);
            spec.utilizations = parse_u_list(u_list);
            spec.policies = parse_policy_list(policies);
            spec.cores = cores;
            spec.seed = seed;
            const auto result = whrt::run_experiment(spec);
            Output out(out_path);
            whrt::write_experiment_csv(out.stream(), result, !no_timing);
            out.finish();
            return result.complete ? kOk : kUsage;
        }
    } catch (const whrt::Error& e) {
        std::cerr << "error (" << whrt::to_string(e.code()) << "): " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
