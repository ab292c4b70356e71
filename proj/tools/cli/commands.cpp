#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cli/documents.hpp"

namespace truncvar::cli {

namespace {

template <class Fn>
CommandOutput guarded(Fn&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return {2, {}, std::string("error: ") + std::string(to_string(e.code())) + ": " + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {2, {}, std::string("error: ") + e.what() + "\n"};
    }
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

bool close_enough(double a, double b, double scale) {
    return std::abs(a - b) <= 1e-9 * (1.0 + scale);
}

json violations_json(const std::vector<Violation>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(to_json(v));
    return arr;
}

void write_trace(const SimulationTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot open trace file '" + path + "' for writing");
    for (std::size_t i = 0; i < trace.rows.size(); ++i) out << trace_record_json(trace, i).dump() << '\n';
}

}  // namespace

CommandOutput cmd_check(const CheckOptions& opts) {
    return guarded([&]() -> CommandOutput {
        if (opts.pair.empty() == opts.clamp.empty()) bad_input("give exactly one of --pair or --clamp");
        const auto bytes = read_file(opts.input);
        const auto doc = parse_distribution(bytes);

        json report = report_header("check", bytes);
        if (!opts.pair.empty()) {
            if (opts.pair.size() != 2) bad_input("--pair takes two variable names");
            const auto& x1 = doc.get(opts.pair[0]);
            const auto& x2 = doc.get(opts.pair[1]);
            report["mode"] = "pair";
            report["variables"] = {{"X1", opts.pair[0]}, {"X2", opts.pair[1]}};
            report["gap_report"] = to_json(covariance_gap(x1, x2));
            report["cov_equality"] = to_json(certify_cov_equality(x1, x2), doc.space);
            report["variance_sum"] = to_json(variance_sum_check(x1, x2));
            report["min_variance_equality"] = to_json(certify_min_variance_equality(x1, x2), doc.space);
        } else {
            if (opts.clamp.size() != 3) bad_input("--clamp takes three variable names: X LOWER UPPER");
            const auto& x = doc.get(opts.clamp[0]);
            const auto& lo = doc.get(opts.clamp[1]);
            const auto& hi = doc.get(opts.clamp[2]);
            report["mode"] = "clamp";
            report["variables"] = {{"X", opts.clamp[0]}, {"X1", opts.clamp[1]}, {"X2", opts.clamp[2]}};
            report["clamp_bound"] = to_json(clamp_variance_bound(x, lo, hi));
            report["clamp_equality"] = to_json(classify_clamp_equality(x, lo, hi), doc.space, true);
        }
        return {0, emit(report), {}};
    });
}

CommandOutput cmd_verify(const VerifyOptions& opts) {
    return guarded([&]() -> CommandOutput {
        if (opts.cases < 1) bad_input("--cases must be >= 1");
        if (opts.max_outcomes < 1) bad_input("--max-outcomes must be >= 1");
        const auto values = parse_rational_list(opts.value_set);

        json params{{"seed", opts.seed},
                    {"cases", opts.cases},
                    {"max_outcomes", opts.max_outcomes},
                    {"value_set", json::array()}};
        for (const auto& v : values) params["value_set"].push_back(rational_json(v));

        const auto sweep = exhaustive_sweep(static_cast<std::size_t>(opts.max_outcomes), values);
        const auto ids = randomized_identities(opts.seed, static_cast<std::size_t>(opts.cases));
        const auto mono = randomized_monotonicity(opts.seed, static_cast<std::size_t>(opts.cases));

        json report = report_header("verify", params.dump());
        report["parameters"] = params;
        report["sweep"] = {{"spaces", sweep.spaces},
                           {"pair_instances", sweep.pair_instances},
                           {"triple_instances", sweep.triple_instances},
                           {"cov_equalities", sweep.cov_equalities},
                           {"min_variance_equalities", sweep.min_variance_equalities},
                           {"clamp_equalities", sweep.clamp_equalities},
                           {"violations", sweep.violation_count}};
        report["identities"] = {{"cases", ids.cases}, {"violations", ids.violation_count}};
        report["monotonicity"] = {{"cases", mono.cases}, {"violations", mono.violation_count}};

        std::vector<Violation> all = sweep.violations;
        all.insert(all.end(), ids.violations.begin(), ids.violations.end());
        all.insert(all.end(), mono.violations.begin(), mono.violations.end());
        const auto total = sweep.violation_count + ids.violation_count + mono.violation_count;
        report["status"] = total == 0 ? "pass" : "fail";
        if (total != 0) report["violations"] = violations_json(all);
        return {total == 0 ? 0 : 1, emit(report), {}};
    });
}

std::string demo_document() {
    const json doc = {{"outcomes",
                       {{{"p", "1/2"}, {"vars", {{"X", "0"}, {"X1", "2"}, {"X2", "2"}}}},
                        {{"p", "1/4"}, {"vars", {{"X", "1"}, {"X1", "2"}, {"X2", "0"}}}},
                        {{"p", "1/4"}, {"vars", {{"X", "1"}, {"X1", "2"}, {"X2", "1"}}}}}}};
    return doc.dump(2) + "\n";
}

CommandOutput cmd_demo() {
    return guarded([&]() -> CommandOutput {
        const auto text = demo_document();
        const auto doc = parse_distribution(text);
        const auto& x = doc.get("X");
        const auto& x1 = doc.get("X1");
        const auto& x2 = doc.get("X2");

        const auto clamped = clamp(x, x1, x2);
        const auto bound = clamp_variance_bound(x, x1, x2);
        const auto cls = classify_clamp_equality(x, x1, x2);
        const auto gap = covariance_gap(x1, x2);
        const auto cov_cert = certify_cov_equality(x1, x2);
        const Rational var_x = variance(x);

        json clamp_values = json::array();
        std::string shown;
        for (std::size_t i = 0; i < clamped.size(); ++i) {
            clamp_values.push_back(rational_json(clamped[i]));
            shown += (i ? ", " : "") + to_string(clamped[i]);
        }

        json narrative = json::array();
        narrative.push_back("var(X) = " + to_string(var_x));
        narrative.push_back("X(X1,X2) = min(X2, max(X, X1)) takes values (" + shown + ") on (w1, w2, w3)");
        narrative.push_back("var(X(X1,X2)) = " + to_string(bound.var_clamp) +
                            (var_x < bound.var_clamp ? " > " : " <= ") + "var(X) = " + to_string(var_x));
        narrative.push_back("var(X) + var(X1) + var(X2) = " + to_string(bound.var_sum) + " bounds it" +
                            (cls.is_equal() ? " with equality" : " strictly (no equality condition holds)"));
        narrative.push_back("cov(min(X1,X2), max(X1,X2)) - cov(X1,X2) = " + to_string(gap.gap) + ", certificate " +
                            std::string(to_string(cov_cert.kind)) +
                            (cov_cert.direction ? " (" + std::string(to_string(*cov_cert.direction)) + ")" : ""));

        json report = report_header("demo", text);
        report["document"] = json::parse(text);
        report["var_X"] = rational_json(var_x);
        report["var_X1"] = rational_json(variance(x1));
        report["var_X2"] = rational_json(variance(x2));
        report["clamp_values"] = clamp_values;
        report["clamp_bound"] = to_json(bound);
        report["clamp_equality"] = to_json(cls, doc.space, true);
        report["gap_report"] = to_json(gap);
        report["cov_equality"] = to_json(cov_cert, doc.space);
        report["narrative"] = narrative;
        return {0, emit(report), {}};
    });
}

CommandOutput cmd_simulate_queue(const QueueOptions& opts) {
    return guarded([&]() -> CommandOutput {
        if (opts.n < 1) throw Error(ErrorCode::InvalidConfig, "--n must be >= 1");
        QueueConfig cfg;
        cfg.interarrival = parse_marginal(opts.interarrival);
        cfg.service = parse_marginal(opts.service);
        cfg.n_customers = static_cast<std::uint64_t>(opts.n);
        cfg.seed = opts.seed;
        const auto trace = simulate_queue(cfg);
        if (!opts.out.empty()) write_trace(trace, opts.out);

        const auto ia = trace.column_index("interarrival");
        const auto sv = trace.column_index("service");
        const auto wt = trace.column_index("wait");
        std::size_t negative = 0, recursion = 0;
        for (std::size_t k = 0; k < trace.rows.size(); ++k) {
            const auto& r = trace.rows[k];
            if (r[wt] < 0) ++negative;
            if (k + 1 < trace.rows.size()) {
                const double next = trace.rows[k + 1][wt];
                if (next != std::max(r[wt] + r[sv] - r[ia], 0.0)) ++recursion;
            }
        }

        const json config{{"interarrival", describe(cfg.interarrival)},
                          {"service", describe(cfg.service)},
                          {"n", cfg.n_customers},
                          {"seed", cfg.seed}};
        json report = report_header("simulate", json{{"model", "queue"}, {"config", config}}.dump());
        report["model"] = "queue";
        report["config"] = config;
        report["records"] = trace.rows.size();
        report["tracked_field"] = trace.tracked_field;
        report["summary"] = to_json(trace.summary);
        report["checks"] = {{"negative_waits", negative}, {"recursion_mismatches", recursion}};
        const bool ok = negative == 0 && recursion == 0;
        report["status"] = ok ? "pass" : "fail";
        return {ok ? 0 : 1, emit(report), {}};
    });
}

CommandOutput cmd_simulate_inventory(const InventoryOptions& opts) {
    return guarded([&]() -> CommandOutput {
        if (opts.horizon < 1) throw Error(ErrorCode::InvalidConfig, "--N must be >= 1");
        InventoryConfig cfg;
        cfg.demand = parse_marginal(opts.demand);
        cfg.base_stock = opts.base_stock;
        cfg.initial_inventory = opts.initial_inventory;
        cfg.unit_cost = opts.unit_cost;
        cfg.h = opts.h;
        cfg.p = opts.p;
        cfg.horizon = static_cast<std::uint64_t>(opts.horizon);
        cfg.seed = opts.seed;
        if (opts.mode == "back_order") {
            cfg.mode = StockoutMode::BackOrder;
        } else if (opts.mode == "lost_sales") {
            cfg.mode = StockoutMode::LostSales;
        } else {
            throw Error(ErrorCode::InvalidConfig, "--mode must be back_order or lost_sales");
        }
        if (opts.convention == "as_written") {
            cfg.convention = CostConvention::AsWritten;
        } else if (opts.convention == "conventional") {
            cfg.convention = CostConvention::Conventional;
        } else {
            throw Error(ErrorCode::InvalidConfig, "--convention must be as_written or conventional");
        }

        const auto trace = simulate_inventory(cfg);
        if (!opts.out.empty()) write_trace(trace, opts.out);

        std::size_t accounting = 0, truncation = 0;
        const auto col = [&](const char* name) { return trace.column_index(name); };
        const auto before = col("inventory_before"), y = col("y"), order = col("order_qty"),
                   demand = col("demand"), shortage = col("shortage"), excess = col("excess"),
                   supplied = col("supplied"), after = col("inventory_after");
        for (const auto& r : trace.rows) {
            const double low = std::min(r[demand], r[y]);
            if (r[shortage] != r[demand] - low || r[excess] != r[y] - low || r[supplied] != low) ++truncation;
            if (r[order] < 0 || r[y] < cfg.base_stock) ++accounting;
            if (cfg.mode == StockoutMode::BackOrder) {
                const double expected = r[before] + r[order] - r[demand];
                if (!close_enough(r[after], expected, std::abs(r[before]) + r[order] + r[demand])) ++accounting;
            } else if (r[after] < 0 || r[after] != r[excess]) {
                ++accounting;
            }
        }

        // Exact bridge: the empirical law of (D, y) with lower bound 0.
        const auto law = empirical_distribution(trace, {"demand", "y", "supplied"});
        const auto& d = law.get("demand");
        const auto& yy = law.get("y");
        const auto zero = RandomVariable::constant(law.space, 0);
        const auto bound = clamp_variance_bound(d, zero, yy);
        const bool clamp_is_supplied = clamp(d, zero, yy).pointwise_equal(law.get("supplied"));
        auto violations = audit_pair(d, yy);
        const auto triple = audit_triple(d, zero, yy);
        violations.insert(violations.end(), triple.begin(), triple.end());

        const json config{{"demand", describe(cfg.demand)},
                          {"S", cfg.base_stock},
                          {"I0", cfg.initial_inventory},
                          {"c", cfg.unit_cost},
                          {"h", cfg.h},
                          {"p", cfg.p},
                          {"N", cfg.horizon},
                          {"mode", to_string(cfg.mode)},
                          {"convention", to_string(cfg.convention)},
                          {"seed", cfg.seed}};
        json report = report_header("simulate", json{{"model", "inventory"}, {"config", config}}.dump());
        report["model"] = "inventory";
        report["config"] = config;
        report["records"] = trace.rows.size();
        report["tracked_field"] = trace.tracked_field;
        report["summary"] = to_json(trace.summary);
        report["supplied_summary"] = to_json(summarize(trace.column("supplied")));
        if (trace.rows.size() == 1) {
            report["first_period"] = trace_record_json(trace, 0);
        }
        report["checks"] = {{"accounting_mismatches", accounting}, {"truncation_mismatches", truncation}};
        report["bridge"] = {{"outcomes", law.space.size()},
                            {"var_clamp", rational_json(bound.var_clamp)},
                            {"var_sum", rational_json(bound.var_sum)},
                            {"bound_holds", bound.var_clamp <= bound.var_sum},
                            {"clamp_equals_supplied", clamp_is_supplied},
                            {"audit_violations", violations.size()}};
        const bool ok = accounting == 0 && truncation == 0 && clamp_is_supplied && violations.empty() &&
                        bound.var_clamp <= bound.var_sum;
        report["status"] = ok ? "pass" : "fail";
        if (!violations.empty()) report["violations"] = violations_json(violations);
        return {ok ? 0 : 1, emit(report), {}};
    });
}

CommandOutput cmd_estimate(const EstimateOptions& opts) {
    return guarded([&]() -> CommandOutput {
        if (opts.n < 2) throw Error(ErrorCode::InvalidSpec, "--n must be >= 2");
        SamplerSpec spec;
        spec.seed = opts.seed;
        spec.n = static_cast<std::uint64_t>(opts.n);
        bool standard_gaussian = false;
        if (opts.family == "gaussian") {
            spec.family = GaussianPair{opts.mean1, opts.mean2, opts.sd1, opts.sd2, opts.rho};
            standard_gaussian = opts.mean1 == 0 && opts.mean2 == 0 && opts.sd1 == 1 && opts.sd2 == 1;
        } else if (opts.family == "independent") {
            spec.family = IndependentProduct{parse_marginal(opts.m1), parse_marginal(opts.m2)};
        } else if (opts.family == "comonotone") {
            spec.family = Comonotone{parse_marginal(opts.marginal), parse_monotone_map(opts.map)};
        } else {
            throw Error(ErrorCode::InvalidSpec, "--family must be gaussian, independent or comonotone");
        }
        validate(spec);
        const auto est = estimate_gap(spec);

        json report = report_header("estimate", describe(spec));
        report["spec"] = describe(spec);
        report["estimate"] = to_json(est);
        if (standard_gaussian) {
            const double oracle = gaussian_gap_oracle(opts.rho);
            report["oracle"] = {{"gap", oracle},
                                {"within_4_se", std::abs(est.gap_estimate - oracle) <= 4 * est.standard_error}};
        }
        const bool ok = !(est.gap_estimate < -3.0 * est.standard_error);
        report["lower_bound_check"] = {{"threshold_se", -3.0}, {"passed", ok}};
        report["status"] = ok ? "pass" : "fail";
        return {ok ? 0 : 1, emit(report), {}};
    });
}

}  // namespace truncvar::cli
