#pragma once

// Simulators for a periodic-review inventory under a base-stock policy and a
// single-server FCFS queue driven by Lindley's recursion, plus the bridge
// from a trace to an exact empirical distribution.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "truncvar/dist_core.hpp"
#include "truncvar/montecarlo.hpp"

namespace truncvar {

enum class StockoutMode { BackOrder, LostSales };

// AsWritten charges h on max(D - y, 0) and p on max(y - D, 0);
// Conventional swaps the two (h on leftover stock, p on shortage).
enum class CostConvention { AsWritten, Conventional };

std::string_view to_string(StockoutMode m);
std::string_view to_string(CostConvention c);

struct InventoryConfig {
    double unit_cost = 0.0;  // c
    double h = 0.0;
    double p = 0.0;
    double base_stock = 0.0;         // S
    double initial_inventory = 0.0;  // I0, may be negative under back-orders
    Marginal demand = ConstantMarginal{0.0};
    std::uint64_t seed = 0;
    std::uint64_t horizon = 1;  // N
    StockoutMode mode = StockoutMode::BackOrder;
    CostConvention convention = CostConvention::AsWritten;
};

struct QueueConfig {
    Marginal interarrival = ExponentialMarginal{1.0};
    Marginal service = ExponentialMarginal{1.0};
    std::uint64_t n_customers = 1;
    std::uint64_t seed = 0;
};

void validate(const InventoryConfig& cfg);
void validate(const QueueConfig& cfg);

struct TraceSummary {
    double mean = 0.0;
    double variance = 0.0;  // population (1/n) variance
    double min = 0.0;
    double max = 0.0;
};

TraceSummary summarize(std::span<const double> values);

// Row-oriented trace: one row per period/customer, columns named by `fields`.
// The first column is the 1-based step index.
struct SimulationTrace {
    std::vector<std::string> fields;
    std::string tracked_field;
    std::vector<std::vector<double>> rows;
    TraceSummary summary;

    std::size_t column_index(std::string_view name) const;  // throws UnknownField
    std::vector<double> column(std::string_view name) const;
};

// Fields: period, inventory_before, y, order_qty, demand, shortage, excess,
//         supplied, inventory_after, cost. Tracked: cost.
SimulationTrace simulate_inventory(const InventoryConfig& cfg);

// Fields: customer, interarrival, service, wait. Tracked: wait.
SimulationTrace simulate_queue(const QueueConfig& cfg);

// W_1 = 0, W_{k+1} = max(W_k + increments[k-1], 0); returns increments.size()+1 waits.
std::vector<double> lindley_waits(std::span<const double> increments);

struct EmpiricalLaw {
    SampleSpace space;
    std::vector<std::string> names;
    std::vector<RandomVariable> variables;

    const RandomVariable& get(std::string_view name) const;  // throws UnknownField
};

// Weight 1/n per row, rows with identical selected values merged, outcomes in
// order of first appearance. Values are converted exactly from double.
EmpiricalLaw empirical_distribution(const SimulationTrace& trace,
                                    const std::vector<std::string>& fields);

}  // namespace truncvar
