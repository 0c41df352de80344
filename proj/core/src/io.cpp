#include "whrt/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace whrt {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& what) {
    throw Error(ErrorCode::ParseError, std::string(source) + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::int64_t field(const json& obj, std::string_view source, const std::string& path,
                   const char* key, std::int64_t min_value) {
    const std::string where = path + "." + key;
    auto it = obj.find(key);
    if (it == obj.end()) fail(source, where + ": missing");
    if (!it->is_number_integer()) fail(source, where + ": expected an integer");
    const auto v = it->get<std::int64_t>();
    if (v < min_value) {
        fail(source, where + ": must be >= " + std::to_string(min_value) + ", got " +
                         std::to_string(v));
    }
    return v;
}

std::string q_label(std::uint32_t q) { return "q=" + std::to_string(q); }

}  // namespace

TaskSet parse_taskset(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        fail(source, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": malformed JSON");
    }
    if (!doc.is_object()) fail(source, "top level must be an object");

    auto version = doc.find("version");
    if (version == doc.end()) fail(source, "version: missing");
    if (!version->is_number_integer() || version->get<int>() != kTaskSetFileVersion) {
        fail(source, "version: unsupported (expected " + std::to_string(kTaskSetFileVersion) + ")");
    }
    auto list = doc.find("tasks");
    if (list == doc.end()) fail(source, "tasks: missing");
    if (!list->is_array()) fail(source, "tasks: expected an array");

    std::vector<Task> tasks;
    tasks.reserve(list->size());
    for (std::size_t i = 0; i < list->size(); ++i) {
        const json& entry = (*list)[i];
        const std::string path = "tasks[" + std::to_string(i) + "]";
        if (!entry.is_object()) fail(source, path + ": expected an object");
        const auto id = field(entry, source, path, "id", 0);
        const auto c = field(entry, source, path, "C", 1);
        const auto d = field(entry, source, path, "D", 1);
        const auto t = field(entry, source, path, "T", 1);
        const auto m = field(entry, source, path, "m", 0);
        const auto k = field(entry, source, path, "K", 1);
        if (id > UINT32_MAX || m > UINT32_MAX || k > UINT32_MAX) {
            fail(source, path + ": value out of range");
        }
        try {
            tasks.emplace_back(static_cast<TaskId>(id), c, d, t,
                               WeaklyHardConstraint(static_cast<std::uint32_t>(m),
                                                    static_cast<std::uint32_t>(k)));
        } catch (const Error& e) {
            fail(source, path + ": " + e.what());
        }
    }
    try {
        return TaskSet(std::move(tasks));
    } catch (const Error& e) {
        fail(source, e.what());
    }
}

TaskSet load_taskset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_taskset(buf.str(), path.string());
}

std::string dump_taskset(const TaskSet& ts) {
    using ordered = nlohmann::ordered_json;
    ordered tasks = ordered::array();
    for (const auto& t : ts) {
        tasks.push_back(ordered{{"id", t.id},
                                {"C", t.wcet},
                                {"D", t.deadline},
                                {"T", t.period},
                                {"m", t.constraint.misses()},
                                {"K", t.constraint.window()}});
    }
    ordered doc{{"version", kTaskSetFileVersion}, {"tasks", std::move(tasks)}};
    return doc.dump(2) + "\n";
}

void save_taskset(const std::filesystem::path& path, const TaskSet& ts) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << dump_taskset(ts);
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

void write_report_csv(std::ostream& os, const TaskSet& ts, const AnalysisReport& report) {
    os << "task,C,D,T,m,K,class,rub,slack,schedulable\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const Task& t = ts[i];
        const TaskVerdict& v = report.tasks.at(i);
        os << t.id << ',' << t.wcet << ',' << t.deadline << ',' << t.period << ','
           << t.constraint.misses() << ',' << t.constraint.window() << ','
           << to_string(classify(t.constraint)) << ',' << v.response_bound << ',' << v.slack
           << ',' << (v.schedulable ? 1 : 0) << '\n';
    }
}

void write_report_text(std::ostream& os, const TaskSet& ts, const AnalysisReport& report,
                       InterferencePolicy policy, std::uint32_t cores) {
    os << "policy " << to_string(policy) << ", " << cores << " cores, U = " << std::fixed
       << std::setprecision(4) << ts.utilization() << std::defaultfloat << '\n';
    os << std::left << std::setw(8) << "task" << std::right << std::setw(8) << "C"
       << std::setw(8) << "D" << std::setw(8) << "T" << std::setw(8) << "(m,K)"
       << std::setw(8) << "Rub" << std::setw(8) << "slack" << "  verdict\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const Task& t = ts[i];
        const TaskVerdict& v = report.tasks.at(i);
        const std::string mk = "(" + std::to_string(t.constraint.misses()) + "," +
                               std::to_string(t.constraint.window()) + ")";
        os << std::left << std::setw(8) << t.id << std::right << std::setw(8) << t.wcet
           << std::setw(8) << t.deadline << std::setw(8) << t.period << std::setw(8) << mk
           << std::setw(8) << v.response_bound << std::setw(8) << v.slack << "  "
           << (v.schedulable ? "ok" : "MISS") << '\n';
    }
    os << (report.schedulable ? "schedulable" : "not schedulable") << '\n';
}

void write_trace_csv(std::ostream& os, const SimTrace& trace) {
    os << "task,job,release,deadline,q,finish,outcome\n";
    for (const TaskTrace& tt : trace.tasks) {
        for (const JobRecord& j : tt.jobs) {
            os << j.task << ',' << j.index << ',' << j.release << ',' << j.deadline << ','
               << j.job_class << ',';
            if (j.finish) {
                os << *j.finish;
            } else {
                os << "KILLED";
            }
            os << ',' << (j.outcome == Outcome::Hit ? "hit" : "miss") << '\n';
        }
    }
}

void write_outcome_strings(std::ostream& os, const SimTrace& trace) {
    for (const TaskTrace& tt : trace.tasks) os << tt.id << ' ' << tt.outcomes.to_string() << '\n';
}

std::string format_priority_table(const TaskSet& ts, const JobClassTable& table) {
    std::uint32_t columns = 0;
    for (std::size_t i = 0; i < table.size(); ++i) columns = std::max(columns, table.class_count(i));

    std::ostringstream os;
    os << std::left << std::setw(6) << "task" << std::right;
    for (std::uint32_t q = 0; q < columns; ++q) os << std::setw(6) << q_label(q);
    os << '\n';
    for (std::size_t idx : table.order) {
        os << std::left << std::setw(6) << ts[idx].id << std::right;
        for (std::uint32_t q = 0; q < columns; ++q) {
            if (q < table.class_count(idx)) {
                os << std::setw(6) << table.priority(idx, q);
            } else {
                os << std::setw(6) << "-";
            }
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace whrt
