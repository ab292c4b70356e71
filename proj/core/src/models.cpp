#include "truncvar/models.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace truncvar {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); }

void check_marginal(const Marginal& m, const char* what) {
    try {
        validate(m);
    } catch (const Error& e) {
        invalid(std::string(what) + ": " + e.what());
    }
    if (!is_nonnegative(m)) invalid(std::string(what) + " must be nonnegative-valued");
}

bool nonneg_finite(double v) { return std::isfinite(v) && v >= 0; }

}  // namespace

std::string_view to_string(StockoutMode m) {
    return m == StockoutMode::BackOrder ? "back_order" : "lost_sales";
}

std::string_view to_string(CostConvention c) {
    return c == CostConvention::AsWritten ? "as_written" : "conventional";
}

void validate(const InventoryConfig& cfg) {
    if (cfg.horizon < 1) invalid("horizon N must be >= 1");
    if (!nonneg_finite(cfg.unit_cost) || !nonneg_finite(cfg.h) || !nonneg_finite(cfg.p)) {
        invalid("costs c, h, p must be finite and >= 0");
    }
    if (!nonneg_finite(cfg.base_stock)) invalid("base stock S must be finite and >= 0");
    if (!std::isfinite(cfg.initial_inventory)) invalid("initial inventory must be finite");
    if (cfg.mode == StockoutMode::LostSales && cfg.initial_inventory < 0) {
        invalid("initial inventory must be >= 0 under lost sales");
    }
    check_marginal(cfg.demand, "demand");
}

void validate(const QueueConfig& cfg) {
    if (cfg.n_customers < 1) invalid("n_customers must be >= 1");
    check_marginal(cfg.interarrival, "interarrival");
    check_marginal(cfg.service, "service");
}

TraceSummary summarize(std::span<const double> values) {
    TraceSummary s;
    if (values.empty()) return s;
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / n;
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.variance = ss / n;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    return s;
}

std::size_t SimulationTrace::column_index(std::string_view name) const {
    const auto it = std::find(fields.begin(), fields.end(), name);
    if (it == fields.end()) {
        throw Error(ErrorCode::UnknownField, "trace has no field '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - fields.begin());
}

std::vector<double> SimulationTrace::column(std::string_view name) const {
    const auto idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[idx]);
    return out;
}

SimulationTrace simulate_inventory(const InventoryConfig& cfg) {
    validate(cfg);
    SimulationTrace trace;
    trace.fields = {"period",   "inventory_before", "y",        "order_qty",       "demand",
                    "shortage", "excess",           "supplied", "inventory_after", "cost"};
    trace.tracked_field = "cost";
    trace.rows.reserve(cfg.horizon);

    const bool as_written = cfg.convention == CostConvention::AsWritten;
    double inventory = cfg.initial_inventory;
    for (std::uint64_t n = 1; n <= cfg.horizon; ++n) {
        PhiloxStream stream(cfg.seed, StreamDomain::Inventory, n);
        const double before = inventory;
        const double y = std::max(before, cfg.base_stock);
        const double order = y - before;
        const double demand = sample(cfg.demand, stream);
        const double shortage = std::max(demand - y, 0.0);
        const double excess = std::max(y - demand, 0.0);
        const double supplied = std::min(demand, y);
        const double cost = cfg.unit_cost * order +
                            (as_written ? cfg.h * shortage + cfg.p * excess
                                        : cfg.h * excess + cfg.p * shortage);
        inventory = cfg.mode == StockoutMode::BackOrder ? y - demand : excess;
        trace.rows.push_back({static_cast<double>(n), before, y, order, demand, shortage, excess,
                              supplied, inventory, cost});
    }
    trace.summary = summarize(trace.column("cost"));
    return trace;
}

std::vector<double> lindley_waits(std::span<const double> increments) {
    std::vector<double> waits;
    waits.reserve(increments.size() + 1);
    waits.push_back(0.0);
    for (double d : increments) waits.push_back(std::max(waits.back() + d, 0.0));
    return waits;
}

SimulationTrace simulate_queue(const QueueConfig& cfg) {
    validate(cfg);
    SimulationTrace trace;
    trace.fields = {"customer", "interarrival", "service", "wait"};
    trace.tracked_field = "wait";
    trace.rows.reserve(cfg.n_customers);

    double wait = 0.0;
    std::vector<double> waits;
    waits.reserve(cfg.n_customers);
    for (std::uint64_t k = 1; k <= cfg.n_customers; ++k) {
        PhiloxStream stream(cfg.seed, StreamDomain::Queue, k);
        // A_k separates arrivals k and k+1; S_k is customer k's service.
        const double a = sample(cfg.interarrival, stream);
        const double s = sample(cfg.service, stream);
        trace.rows.push_back({static_cast<double>(k), a, s, wait});
        waits.push_back(wait);
        wait = std::max(wait + s - a, 0.0);
    }
    trace.summary = summarize(waits);
    return trace;
}

const RandomVariable& EmpiricalLaw::get(std::string_view name) const {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw Error(ErrorCode::UnknownField, "empirical law has no variable '" + std::string(name) + "'");
    }
    return variables[static_cast<std::size_t>(it - names.begin())];
}

EmpiricalLaw empirical_distribution(const SimulationTrace& trace,
                                    const std::vector<std::string>& fields) {
    if (trace.rows.empty()) throw Error(ErrorCode::EmptyTrace, "trace has no records");
    std::vector<std::size_t> columns;
    for (const auto& f : fields) columns.push_back(trace.column_index(f));

    // Merge on the exact double values; doubles map one-to-one to rationals.
    std::map<std::vector<double>, std::size_t> index;
    std::vector<std::vector<double>> distinct;
    std::vector<unsigned long> counts;
    for (const auto& row : trace.rows) {
        std::vector<double> key;
        for (auto c : columns) key.push_back(row[c] == 0.0 ? 0.0 : row[c]);  // fold -0
        const auto [it, inserted] = index.emplace(key, distinct.size());
        if (inserted) {
            distinct.push_back(std::move(key));
            counts.push_back(0);
        }
        ++counts[it->second];
    }

    const auto total = static_cast<unsigned long>(trace.rows.size());
    std::vector<Outcome> outcomes;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        Rational p(counts[i], total);
        p.canonicalize();
        outcomes.push_back({"r" + std::to_string(i + 1), p});
    }
    EmpiricalLaw law{SampleSpace::make(std::move(outcomes)), fields, {}};
    for (std::size_t f = 0; f < fields.size(); ++f) {
        std::vector<Rational> values;
        values.reserve(distinct.size());
        for (const auto& key : distinct) values.push_back(from_double(key[f]));
        law.variables.emplace_back(law.space, std::move(values));
    }
    return law;
}

}  // namespace truncvar
