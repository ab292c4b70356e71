#pragma once

// Subcommand bodies for the truncvar tool. Each returns what it would print
// and the process exit code, so tests can drive them in-process.
//
// Exit codes: 0 all checks passed, 1 a mathematical or statistical violation
// was detected, 2 invalid input.

#include <cstdint>
#include <string>
#include <vector>

namespace truncvar::cli {

struct CommandOutput {
    int exit_code = 0;
    std::string out;
    std::string err;
};

struct CheckOptions {
    std::string input;
    std::vector<std::string> pair;   // X1 X2
    std::vector<std::string> clamp;  // X LOWER UPPER
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::int64_t cases = 10000;
    std::int64_t max_outcomes = 4;
    std::string value_set = "0,1,2";
};

struct QueueOptions {
    std::string interarrival = "exp:0.5";
    std::string service = "exp:1";
    std::int64_t n = 1000;
    std::uint64_t seed = 0;
    std::string out;
};

struct InventoryOptions {
    std::string demand = "const:0";
    double base_stock = 0.0;
    double initial_inventory = 0.0;
    double unit_cost = 0.0;
    double h = 0.0;
    double p = 0.0;
    std::int64_t horizon = 1;
    std::string mode = "back_order";
    std::string convention = "as_written";
    std::uint64_t seed = 0;
    std::string out;
};

struct EstimateOptions {
    std::string family = "gaussian";  // gaussian | independent | comonotone
    double rho = 0.0;
    double mean1 = 0.0;
    double mean2 = 0.0;
    double sd1 = 1.0;
    double sd2 = 1.0;
    std::string m1 = "uniform:0:1";
    std::string m2 = "uniform:0:1";
    std::string marginal = "uniform:0:1";
    std::string map = "identity";
    std::int64_t n = 1000000;
    std::uint64_t seed = 1;
};

CommandOutput cmd_check(const CheckOptions& opts);
CommandOutput cmd_verify(const VerifyOptions& opts);
CommandOutput cmd_demo();
CommandOutput cmd_simulate_queue(const QueueOptions& opts);
CommandOutput cmd_simulate_inventory(const InventoryOptions& opts);
CommandOutput cmd_estimate(const EstimateOptions& opts);

// The three-outcome example document used by `demo`.
std::string demo_document();

}  // namespace truncvar::cli
