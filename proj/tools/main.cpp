#include "CLI11.hpp"

#include <iostream>

#include "cli/commands.hpp"
#include "cli/documents.hpp"

using namespace truncvar::cli;

namespace {

int finish(const CommandOutput& r) {
    std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact bounds and certificates for truncated random variables"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Bound checks and equality certificates for a distribution file");
    check_cmd->add_option("--input", check.input, "DistributionDocument JSON file")->required();
    auto* pair_opt = check_cmd->add_option("--pair", check.pair, "X1 X2")->expected(2);
    auto* clamp_opt = check_cmd->add_option("--clamp", check.clamp, "X LOWER UPPER")->expected(3);
    pair_opt->excludes(clamp_opt);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive and randomized property sweeps");
    verify_cmd->add_option("--seed", verify.seed);
    verify_cmd->add_option("--cases", verify.cases);
    verify_cmd->add_option("--max-outcomes", verify.max_outcomes);
    verify_cmd->add_option("--value-set", verify.value_set, "comma-separated rationals");

    auto* demo_cmd = app.add_subcommand("demo", "Reproduce the three-outcome counterexample");

    auto* simulate_cmd = app.add_subcommand("simulate", "Run a stochastic model");
    simulate_cmd->require_subcommand(1);

    QueueOptions queue;
    auto* queue_cmd = simulate_cmd->add_subcommand("queue", "Single-server FCFS queue (Lindley recursion)");
    queue_cmd->add_option("--ia", queue.interarrival, "interarrival marginal, e.g. exp:0.5");
    queue_cmd->add_option("--svc", queue.service, "service marginal, e.g. exp:1");
    queue_cmd->add_option("--n", queue.n, "number of customers");
    queue_cmd->add_option("--seed", queue.seed);
    queue_cmd->add_option("--out", queue.out, "trace file (one JSON object per line)");

    InventoryOptions inv;
    auto* inv_cmd = simulate_cmd->add_subcommand("inventory", "Periodic-review inventory under a base-stock policy");
    inv_cmd->set_help_flag("--help", "Print this help message and exit");
    inv_cmd->add_option("--demand", inv.demand, "demand marginal, e.g. const:7 or two_point:0:10:0.5");
    inv_cmd->add_option("--S", inv.base_stock, "base-stock level");
    inv_cmd->add_option("--I0", inv.initial_inventory, "initial inventory");
    inv_cmd->add_option("--c", inv.unit_cost, "unit purchase cost");
    inv_cmd->add_option("--h", inv.h, "cost per unit of max(D - y, 0)");
    inv_cmd->add_option("--p", inv.p, "cost per unit of max(y - D, 0)");
    inv_cmd->add_option("--N", inv.horizon, "horizon in periods");
    inv_cmd->add_option("--mode", inv.mode, "back_order | lost_sales");
    inv_cmd->add_option("--convention", inv.convention, "as_written | conventional");
    inv_cmd->add_option("--seed", inv.seed);
    inv_cmd->add_option("--out", inv.out, "trace file (one JSON object per line)");

    EstimateOptions est;
    auto* est_cmd = app.add_subcommand("estimate", "Monte Carlo estimate of the covariance gap");
    est_cmd->add_option("--family", est.family, "gaussian | independent | comonotone");
    est_cmd->add_option("--rho", est.rho);
    est_cmd->add_option("--mean1", est.mean1);
    est_cmd->add_option("--mean2", est.mean2);
    est_cmd->add_option("--sd1", est.sd1);
    est_cmd->add_option("--sd2", est.sd2);
    est_cmd->add_option("--m1", est.m1, "first marginal (independent)");
    est_cmd->add_option("--m2", est.m2, "second marginal (independent)");
    est_cmd->add_option("--marginal", est.marginal, "marginal (comonotone)");
    est_cmd->add_option("--map", est.map, "identity | double | exp | cube (comonotone)");
    est_cmd->add_option("--n", est.n);
    est_cmd->add_option("--seed", est.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*check_cmd) return finish(cmd_check(check));
    if (*verify_cmd) return finish(cmd_verify(verify));
    if (*demo_cmd) return finish(cmd_demo());
    if (*queue_cmd) return finish(cmd_simulate_queue(queue));
    if (*inv_cmd) return finish(cmd_simulate_inventory(inv));
    if (*est_cmd) return finish(cmd_estimate(est));
    return 2;
}
