#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "whrt/gen.hpp"
#include "whrt/io.hpp"

using namespace whrt;

namespace {

std::string parse_error(std::string_view text) {
    try {
        parse_taskset(text, "set.json");
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        return e.what();
    }
    ADD_FAILURE() << "expected a parse error";
    return {};
}

bool contains(const std::string& haystack, std::string_view needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(ParseTaskset, ReadsFixture) {
    const auto ts = load_taskset(std::filesystem::path(WHRT_TEST_DATA) / "three_tasks.json");
    ASSERT_EQ(ts.size(), 3u);
    EXPECT_EQ(ts[1], Task(2, 3, 7, 7, WeaklyHardConstraint(1, 3)));
}

TEST(ParseTaskset, MalformedJsonReportsPosition) {
    const auto msg = parse_error("{\"version\": 1,\n  \"tasks\": [ {\"id\": 0,, } ]}");
    EXPECT_TRUE(contains(msg, "set.json")) << msg;
    EXPECT_TRUE(contains(msg, "line 2")) << msg;
    EXPECT_TRUE(contains(msg, "malformed JSON")) << msg;
}

TEST(ParseTaskset, FieldErrorsNameThePath) {
    EXPECT_TRUE(contains(parse_error(R"({"tasks": []})"), "version: missing"));
    EXPECT_TRUE(contains(parse_error(R"({"version": 2, "tasks": []})"), "version: unsupported"));
    EXPECT_TRUE(contains(parse_error(R"({"version": 1})"), "tasks: missing"));
    const auto missing = parse_error(
        R"({"version": 1, "tasks": [{"id": 0, "C": 1, "D": 4, "T": 4, "m": 0, "K": 1},
                                    {"id": 1, "D": 4, "T": 4, "m": 0, "K": 1}]})");
    EXPECT_TRUE(contains(missing, "tasks[1].C: missing")) << missing;
    const auto type = parse_error(
        R"({"version": 1, "tasks": [{"id": 0, "C": 1.5, "D": 4, "T": 4, "m": 0, "K": 1}]})");
    EXPECT_TRUE(contains(type, "tasks[0].C: expected an integer")) << type;
    const auto range = parse_error(
        R"({"version": 1, "tasks": [{"id": 0, "C": 0, "D": 4, "T": 4, "m": 0, "K": 1}]})");
    EXPECT_TRUE(contains(range, "tasks[0].C: must be >= 1")) << range;
}

TEST(ParseTaskset, ModelErrorsBecomeParseErrors) {
    const auto deadline = parse_error(
        R"({"version": 1, "tasks": [{"id": 0, "C": 5, "D": 4, "T": 4, "m": 0, "K": 1}]})");
    EXPECT_TRUE(contains(deadline, "tasks[0]")) << deadline;
    const auto mk = parse_error(
        R"({"version": 1, "tasks": [{"id": 0, "C": 1, "D": 4, "T": 4, "m": 3, "K": 3}]})");
    EXPECT_TRUE(contains(mk, "tasks[0]")) << mk;
    parse_error(R"({"version": 1, "tasks": [{"id": 0, "C": 1, "D": 4, "T": 4, "m": 0, "K": 1},
                                          {"id": 0, "C": 1, "D": 4, "T": 4, "m": 0, "K": 1}]})");
}

TEST(DumpTaskset, RoundTrips) {
    GenSpec spec;
    spec.tasks = 15;
    spec.utilization = 2.0;
    spec.seed = 4;
    const auto ts = make_taskset(spec);
    const auto text = dump_taskset(ts);
    const auto back = parse_taskset(text);
    ASSERT_EQ(back.size(), ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) EXPECT_EQ(back[i], ts[i]);
    EXPECT_EQ(dump_taskset(back), text);
    EXPECT_TRUE(contains(text, "\"version\": 1"));
}

TEST(LoadTaskset, MissingFile) {
    try {
        load_taskset("/nonexistent/whrt.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IoError);
    }
}

TEST(Writers, ReportCsv) {
    const auto ts = load_taskset(std::filesystem::path(WHRT_TEST_DATA) / "three_tasks.json");
    std::ostringstream os;
    write_report_csv(os, ts, analyze(ts, 2, InterferencePolicy::WeaklyHardJC0));
    EXPECT_EQ(os.str(),
              "task,C,D,T,m,K,class,rub,slack,schedulable\n"
              "1,2,6,6,2,5,low,2,4,1\n"
              "2,3,7,7,1,3,low,3,4,1\n"
              "3,2,8,8,2,3,high,2,6,1\n");
}

TEST(Writers, TraceCsvMarksKilledJobs) {
    const TaskSet ts({Task(0, 3, 4, 4), Task(1, 3, 4, 4)});
    SimConfig cfg;
    cfg.horizon = 4;
    const auto trace = simulate(ts, assign_priorities(ts), cfg);
    std::ostringstream os;
    write_trace_csv(os, trace);
    EXPECT_EQ(os.str(),
              "task,job,release,deadline,q,finish,outcome\n"
              "0,0,0,4,0,3,hit\n"
              "1,0,0,4,0,KILLED,miss\n");
    std::ostringstream strings;
    write_outcome_strings(strings, trace);
    EXPECT_EQ(strings.str(), "0 1\n1 0\n");
}

TEST(Writers, PriorityTableLayout) {
    const auto ts = load_taskset(std::filesystem::path(WHRT_TEST_DATA) / "three_tasks.json");
    EXPECT_EQ(format_priority_table(ts, assign_priorities(ts)),
              "task     q=0   q=1   q=2   q=3\n"
              "1          9     6     3     1\n"
              "2          8     5     2     -\n"
              "3          7     4     -     -\n");
}
