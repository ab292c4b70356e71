// Acceptance suite. One line per criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <truncvar/bounds.hpp>
#include <truncvar/models.hpp>
#include <truncvar/montecarlo.hpp>
#include <truncvar/verification.hpp>

#include "cli/commands.hpp"
#include "cli/documents.hpp"
#include "support/process.hpp"

using namespace truncvar;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= limit_seconds) {
        o.pass = false;
        o.detail += " [over time limit " + std::to_string(limit_seconds) + " s]";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

Outcome golden() {
    const auto r = cli::cmd_demo();
    const auto j = json::parse(r.out);
    const bool ok = r.exit_code == 0 && j["var_X"] == "1/4" && j["clamp_bound"]["var_clamp"] == "11/16" &&
                    j["clamp_bound"]["var_sum"] == "15/16";
    return {ok, "var(X)=" + j["var_X"].get<std::string>() +
                    " var(clamp)=" + j["clamp_bound"]["var_clamp"].get<std::string>() +
                    " bound=" + j["clamp_bound"]["var_sum"].get<std::string>()};
}

Outcome identities() {
    const auto s = randomized_identities(20240601, 10000);
    std::string detail = fmt("%zu cases, %zu violations", s.cases, s.violation_count);
    if (!s.violations.empty()) detail += "; first: " + s.violations.front().property;
    return {s.cases == 10000 && s.violation_count == 0, detail};
}

Outcome sweeps() {
    const auto s = exhaustive_sweep(4, {Rational(0), Rational(1), Rational(2)});
    std::string detail = fmt("%zu pairs, %zu triples, %zu cov equalities, %zu min-var equalities, "
                             "%zu clamp equalities, %zu mismatches",
                             s.pair_instances, s.triple_instances, s.cov_equalities, s.min_variance_equalities,
                             s.clamp_equalities, s.violation_count);
    if (!s.violations.empty()) detail += "; first: " + s.violations.front().property;
    return {s.violation_count == 0 && s.pair_instances > 0 && s.triple_instances > 0, detail};
}

Outcome monotonicity() {
    const auto s = randomized_monotonicity(777, 1000, 16);
    return {s.cases == 1000 && s.violation_count == 0, fmt("%zu cases, %zu failures", s.cases, s.violation_count)};
}

Outcome gaussian() {
    Outcome o;
    std::uint64_t seed = 101;
    for (double rho : {-0.9, 0.0, 0.5, 0.9}) {
        const auto est = estimate_gap({GaussianPair{0, 0, 1, 1, rho}, seed++, 1000000});
        const double oracle = gaussian_gap_oracle(rho);
        const double z = (est.gap_estimate - oracle) / est.standard_error;
        o.pass = o.pass && std::abs(z) <= 4.0;
        o.detail += fmt("rho=%g z=%+.2f; ", rho, z);
    }
    double worst = INFINITY;
    for (const auto& spec : builtin_specs(9, 1000000)) {
        const auto est = estimate_gap(spec);
        // Degenerate specs have gap and SE both 0.
        const double z = est.standard_error > 0 ? est.gap_estimate / est.standard_error : 0.0;
        worst = std::min(worst, z);
        if (est.gap_estimate < -3.0 * est.standard_error) {
            o.pass = false;
            o.detail += "negative gap in " + describe(spec) + "; ";
        }
    }
    o.detail += fmt("builtin min gap/SE=%.2f", worst);
    return o;
}

Outcome queue() {
    QueueConfig cfg{ExponentialMarginal{0.5}, ExponentialMarginal{1.0}, 1000000, 2024};
    const auto trace = simulate_queue(cfg);
    const auto ia = trace.column("interarrival"), svc = trace.column("service"), w = trace.column("wait");
    std::size_t negative = 0, recursion = 0;
    if (w.front() != 0.0) ++recursion;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] < 0.0) ++negative;
        if (k > 0 && w[k] != std::max(w[k - 1] + svc[k - 1] - ia[k - 1], 0.0)) ++recursion;
    }
    const double mean = trace.summary.mean;
    return {std::abs(mean - 1.0) <= 0.05 && negative == 0 && recursion == 0 && w.size() == 1000000,
            fmt("mean wait %.5f, %zu negative, %zu recursion mismatches", mean, negative, recursion)};
}

Outcome bridge() {
    const std::vector<Marginal> demands{TwoPointMarginal{0, 10, 0.5}, ExponentialMarginal{0.2},
                                        UniformMarginal{0, 12}, TwoPointMarginal{3, 9, 0.25}};
    std::size_t failed = 0, violations = 0, outcomes = 0;
    for (std::uint64_t rep = 0; rep < 100; ++rep) {
        InventoryConfig cfg;
        cfg.unit_cost = 1;
        cfg.h = 2;
        cfg.p = 3;
        cfg.base_stock = 4.0 + static_cast<double>(rep % 7);
        cfg.initial_inventory = static_cast<double>(rep % 3);
        cfg.demand = demands[rep % demands.size()];
        cfg.seed = 1000 + rep;
        cfg.horizon = 1000;
        cfg.mode = StockoutMode::LostSales;
        const auto trace = simulate_inventory(cfg);
        const auto law = empirical_distribution(trace, {"demand", "y", "supplied"});
        outcomes += law.space.size();
        const auto& d = law.get("demand");
        const auto& y = law.get("y");
        const auto zero = RandomVariable::constant(law.space, 0);
        auto v = audit_pair(d, y);
        const auto t = audit_triple(d, zero, y);
        v.insert(v.end(), t.begin(), t.end());
        const auto bound = clamp_variance_bound(d, zero, y);
        const bool ok = v.empty() && bound.var_clamp <= bound.var_sum &&
                        clamp(d, zero, y).pointwise_equal(law.get("supplied"));
        violations += v.size();
        if (!ok) ++failed;
    }
    return {failed == 0, fmt("100 replications x 1000 periods, %zu outcomes total, %zu failed, %zu violations",
                             outcomes, failed, violations)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const std::string bin = TRUNCVAR_BIN;
    const fs::path dir = fs::temp_directory_path() / ("truncvar_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const fs::path doc = dir / "demo.json";
    std::ofstream(doc) << cli::demo_document();
    const fs::path trace = dir / "trace.jsonl";

    const std::vector<std::string> commands{
        "demo",
        "check --input " + doc.string() + " --pair X1 X2",
        "check --input " + doc.string() + " --clamp X X1 X2",
        "verify --cases 300 --max-outcomes 3",
        "simulate queue --ia exp:0.5 --svc exp:1 --n 200000 --seed 5 --out " + trace.string(),
        "simulate inventory --demand two_point:0:10:0.5 --S 6 --N 2000 --mode lost_sales --seed 8 --out " +
            trace.string(),
        "estimate --rho 0.3 --n 400000 --seed 4",
        "estimate --family independent --m1 exp:1 --m2 uniform:0:2 --n 200001 --seed 2",
        "estimate --family comonotone --marginal normal:0:1 --map cube --n 150000",
    };
    Outcome o;
    std::size_t runs = 0;
    for (const auto& cmd : commands) {
        std::string reference, reference_trace;
        bool first = true;
        for (const char* threads : {"", "1", "1", "2", "4"}) {
            const std::string env = *threads ? std::string("TRUNCVAR_THREADS=") + threads + " " : "";
            fs::remove(trace);
            const auto r = testutil::run_process(env + bin + " " + cmd + " 2>/dev/null");
            const std::string t = fs::exists(trace) ? slurp(trace) : "";
            ++runs;
            if (r.exit_code != 0) {
                o.pass = false;
                o.detail += "exit " + std::to_string(r.exit_code) + " for '" + cmd + "'; ";
            }
            if (first) {
                reference = r.out;
                reference_trace = t;
                first = false;
            } else if (r.out != reference || t != reference_trace) {
                o.pass = false;
                o.detail += "output differs for '" + cmd + "' with threads='" + threads + "'; ";
            }
        }
    }
    fs::remove_all(dir);
    o.detail += fmt("%zu commands, %zu runs compared", commands.size(), runs);
    return o;
}

}  // namespace

int main() {
    run("AC1", "golden counterexample", 1.0, golden);
    run("AC2", "identity suite", 30.0, identities);
    run("AC3", "characterization sweeps", 60.0, sweeps);
    run("AC4", "monotonicity", 10.0, monotonicity);
    run("AC5", "gaussian oracle", 60.0, gaussian);
    run("AC6", "queue oracle", 30.0, queue);
    run("AC7", "exact bridge", 60.0, bridge);
    run("AC8", "determinism", 600.0, determinism);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
