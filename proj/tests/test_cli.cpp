#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cli/commands.hpp"
#include "cli/documents.hpp"
#include "support/process.hpp"

using namespace truncvar;
using namespace truncvar::cli;
namespace fs = std::filesystem;

namespace {

class TempFile {
   public:
    explicit TempFile(const std::string& content, const std::string& suffix = ".json") {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("truncvar_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + suffix);
        std::ofstream(path_) << content;
    }
    ~TempFile() { fs::remove(path_); }
    std::string path() const { return path_.string(); }

   private:
    fs::path path_;
};

json parse_out(const CommandOutput& r) { return json::parse(r.out); }

const std::string kBin = TRUNCVAR_BIN;

}  // namespace

TEST(DistributionDocument, ParsesDemoDocument) {
    const auto doc = parse_distribution(demo_document());
    EXPECT_EQ(doc.space.size(), 3u);
    ASSERT_EQ(doc.variables.size(), 3u);
    EXPECT_EQ(doc.variables[0].name, "X");
    EXPECT_EQ(doc.get("X2")[0], 2);
    EXPECT_THROW(doc.get("nope"), Error);
}

TEST(DistributionDocument, RejectsBadInput) {
    auto code_of = [](const std::string& text) {
        try {
            parse_distribution(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::EmptyGrid;  // sentinel: nothing thrown
    };
    EXPECT_EQ(code_of("{"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"outcomes": []})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"outcomes": [{"p": 1, "vars": {}}]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"outcomes": [{"p": "1/2", "vars": {"A": "1"}}, {"p": "1/2", "vars": {"B": "1"}}]})"),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"outcomes": [{"p": "1/2", "vars": {"A": "1"}}]})"), ErrorCode::ProbabilitiesDoNotSumToOne);
    EXPECT_EQ(code_of(R"({"outcomes": [{"p": "1", "vars": {"A": "x"}}]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"outcomes": [{"p": "1", "q": "2", "vars": {}}]})"), ErrorCode::ParseError);
}

TEST(DistributionDocument, SerializationRoundTrips) {
    const auto doc = parse_distribution(demo_document());
    const auto again = parse_distribution(distribution_json(doc.variables).dump());
    for (const auto& v : doc.variables) EXPECT_EQ(again.get(v.name).values().size(), v.value.size());
    EXPECT_EQ(distribution_json(again.variables), distribution_json(doc.variables));
}

TEST(MarginalSpec, Parsing) {
    EXPECT_EQ(std::get<ExponentialMarginal>(parse_marginal("exp:0.5")).rate, 0.5);
    EXPECT_EQ(std::get<TwoPointMarginal>(parse_marginal("two_point:0:10:0.5")).v2, 10);
    EXPECT_EQ(std::get<ConstantMarginal>(parse_marginal("const:7")).value, 7);
    EXPECT_THROW(parse_marginal("exp"), Error);
    EXPECT_THROW(parse_marginal("exp:x"), Error);
    EXPECT_THROW(parse_marginal("gamma:1:2"), Error);
    EXPECT_THROW(parse_marginal("uniform:0:1:2"), Error);
}

TEST(Check, ClampModeOnDemoDocument) {
    TempFile f(demo_document());
    const auto r = cmd_check({f.path(), {}, {"X", "X1", "X2"}});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = parse_out(r);
    EXPECT_EQ(j["clamp_bound"]["var_clamp"], "11/16");
    EXPECT_EQ(j["clamp_bound"]["var_sum"], "15/16");
    EXPECT_TRUE(j["clamp_equality"]["satisfied_conditions"].empty());
    EXPECT_EQ(j["tool"], "truncvar");
    EXPECT_EQ(j["input_digest"], "sha256:" + sha256_hex(demo_document()));
}

TEST(Check, PairModeOnDemoDocument) {
    TempFile f(demo_document());
    const auto r = cmd_check({f.path(), {"X1", "X2"}, {}});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = parse_out(r);
    EXPECT_EQ(j["gap_report"]["gap"], "0");
    EXPECT_EQ(j["cov_equality"]["kind"], "EqualDominance");
    EXPECT_EQ(j["cov_equality"]["direction"], "X1>=X2");
    EXPECT_EQ(j["variance_sum"]["lhs"], "11/16");
    EXPECT_EQ(j["min_variance_equality"]["constant_value"], "2");
}

TEST(Check, MalformedProbabilityNamesOutcome) {
    TempFile f(R"({"outcomes": [{"p": "1", "vars": {"A": "0"}}, {"p": "1/0", "vars": {"A": "1"}}]})");
    const auto r = cmd_check({f.path(), {"A", "A"}, {}});
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("outcome 2"), std::string::npos) << r.err;
}

TEST(Check, InputErrors) {
    TempFile f(demo_document());
    EXPECT_EQ(cmd_check({f.path(), {"X1", "Nope"}, {}}).exit_code, 2);
    EXPECT_EQ(cmd_check({f.path(), {}, {}}).exit_code, 2);
    EXPECT_EQ(cmd_check({"/nonexistent/file.json", {"X1", "X2"}, {}}).exit_code, 2);
    TempFile sum(R"({"outcomes": [{"p": "1/3", "vars": {"A": "0"}}, {"p": "1/2", "vars": {"A": "1"}}]})");
    const auto r = cmd_check({sum.path(), {"A", "A"}, {}});
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("1/6"), std::string::npos) << r.err;
}

TEST(Verify, SmallRunPasses) {
    const auto r = cmd_verify({42, 50, 2, "0,1,2"});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = parse_out(r);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["sweep"]["pair_instances"], 90);
    EXPECT_EQ(j["identities"]["cases"], 50);
}

TEST(Verify, InvalidArguments) {
    EXPECT_EQ(cmd_verify({42, 0, 3, "0,1,2"}).exit_code, 2);
    EXPECT_EQ(cmd_verify({42, 10, 0, "0,1,2"}).exit_code, 2);
    EXPECT_EQ(cmd_verify({42, 10, 2, "0,x"}).exit_code, 2);
}

TEST(Demo, ReportsExactValues) {
    const auto r = cmd_demo();
    ASSERT_EQ(r.exit_code, 0);
    const auto j = parse_out(r);
    EXPECT_EQ(j["var_X"], "1/4");
    EXPECT_EQ(j["clamp_bound"]["var_clamp"], "11/16");
    EXPECT_EQ(j["clamp_bound"]["var_sum"], "15/16");
    EXPECT_EQ(j["cov_equality"]["direction"], "X1>=X2");
    EXPECT_EQ(cmd_demo().out, r.out);
}

TEST(Demo, EveryRationalStringRoundTrips) {
    const auto j = parse_out(cmd_demo());
    std::size_t checked = 0;
    std::function<void(const json&)> walk = [&](const json& node) {
        if (node.is_string()) {
            const auto s = node.get<std::string>();
            if (const auto r = parse_rational(s)) {
                EXPECT_EQ(to_string(*r), s);
                ++checked;
            }
        } else if (node.is_structured()) {
            for (const auto& child : node) walk(child);
        }
    };
    walk(j);
    EXPECT_GT(checked, 20u);
}

TEST(Simulate, InventoryExample) {
    InventoryOptions o;
    o.demand = "const:7";
    o.base_stock = 5;
    o.initial_inventory = 2;
    o.unit_cost = 1;
    o.h = 2;
    o.p = 3;
    o.horizon = 1;
    const auto r = cmd_simulate_inventory(o);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = parse_out(r);
    EXPECT_EQ(j["first_period"]["cost"], 7.0);
    EXPECT_EQ(j["status"], "pass");
}

TEST(Simulate, WritesTraceLines) {
    TempFile out("", ".jsonl");
    QueueOptions o;
    o.n = 25;
    o.seed = 3;
    o.out = out.path();
    ASSERT_EQ(cmd_simulate_queue(o).exit_code, 0);
    std::ifstream in(out.path());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        const auto rec = json::parse(line);
        EXPECT_EQ(rec["customer"], lines + 1);
        EXPECT_GE(rec["wait"].get<double>(), 0.0);
        ++lines;
    }
    EXPECT_EQ(lines, 25u);
}

TEST(Simulate, InvalidConfigs) {
    QueueOptions q;
    q.n = 0;
    EXPECT_EQ(cmd_simulate_queue(q).exit_code, 2);
    q.n = 5;
    q.interarrival = "normal:0:1";
    EXPECT_EQ(cmd_simulate_queue(q).exit_code, 2);
    InventoryOptions inv;
    inv.mode = "sometimes";
    EXPECT_EQ(cmd_simulate_inventory(inv).exit_code, 2);
}

TEST(Estimate, ExitCodes) {
    EstimateOptions o;
    o.n = 20000;
    o.rho = 1.0;
    const auto r = cmd_estimate(o);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_EQ(parse_out(r)["estimate"]["gap_estimate"], 0.0);
    o.rho = 2.0;
    EXPECT_EQ(cmd_estimate(o).exit_code, 2);
    o.rho = 0;
    o.family = "copula";
    EXPECT_EQ(cmd_estimate(o).exit_code, 2);
}

TEST(Binary, DemoMatchesInProcess) {
    const auto r = testutil::run_process(kBin + " demo");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, cmd_demo().out);
}

TEST(Binary, ExitCodes) {
    EXPECT_EQ(testutil::run_process(kBin + " verify --cases 0 2>/dev/null").exit_code, 2);
    EXPECT_EQ(testutil::run_process(kBin + " simulate queue --n 0 2>/dev/null").exit_code, 2);
    EXPECT_EQ(testutil::run_process(kBin + " estimate --rho 2 2>/dev/null").exit_code, 2);
    EXPECT_EQ(testutil::run_process(kBin + " frobnicate 2>/dev/null").exit_code, 2);
    EXPECT_EQ(testutil::run_process(kBin + " check --input x.json --pair A 2>/dev/null").exit_code, 2);
    const auto inv = testutil::run_process(
        kBin + " simulate inventory --demand const:7 --S 5 --I0 2 --c 1 --h 2 --p 3 --N 1");
    EXPECT_EQ(inv.exit_code, 0);
    EXPECT_EQ(json::parse(inv.out)["first_period"]["cost"], 7.0);
}
