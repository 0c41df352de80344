#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "whrt/model.hpp"
#include "whrt/priority.hpp"
#include "whrt/rta.hpp"
#include "whrt/sequences.hpp"
#include "whrt/sim.hpp"

namespace whrt {

inline constexpr int kTaskSetFileVersion = 1;

// Task-set file:
//   {"version": 1, "tasks": [{"id": 0, "C": 2, "D": 6, "T": 6, "m": 2, "K": 5}, ...]}
// Throws ParseError naming the line/column of malformed JSON or the offending
// field (e.g. "tasks[1].C"), and the model's validation errors otherwise.
TaskSet parse_taskset(std::string_view text, std::string_view source = "<input>");
TaskSet load_taskset(const std::filesystem::path& path);
std::string dump_taskset(const TaskSet& ts);
void save_taskset(const std::filesystem::path& path, const TaskSet& ts);

// task,C,D,T,m,K,class,rub,slack,schedulable
void write_report_csv(std::ostream& os, const TaskSet& ts, const AnalysisReport& report);
void write_report_text(std::ostream& os, const TaskSet& ts, const AnalysisReport& report,
                       InterferencePolicy policy, std::uint32_t cores);

// task,job,release,deadline,q,finish,outcome; finish is KILLED for killed jobs.
void write_trace_csv(std::ostream& os, const SimTrace& trace);
// One "<task id> <outcome string>" line per task.
void write_outcome_strings(std::ostream& os, const SimTrace& trace);

// Priorities laid out one row per task in deadline order, one column per q.
std::string format_priority_table(const TaskSet& ts, const JobClassTable& table);

}  // namespace whrt
