#pragma once

// Seeded Monte Carlo estimation of the covariance gap
//   cov(min(X1,X2), max(X1,X2)) - cov(X1,X2)
// for continuous or dependent bivariate samplers.
//
// Pairs are generated in fixed chunks of 2^16; chunk k draws from Philox
// stream (seed, MonteCarlo, k). Partial sums are combined in chunk order, so
// results do not depend on the number of worker threads.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "truncvar/philox.hpp"

namespace truncvar {

struct UniformMarginal {
    double a = 0.0;
    double b = 1.0;
};
struct ExponentialMarginal {
    double rate = 1.0;
};
struct NormalMarginal {
    double mean = 0.0;
    double sd = 1.0;
};
// v1 with probability p, v2 otherwise.
struct TwoPointMarginal {
    double v1 = 0.0;
    double v2 = 1.0;
    double p = 0.5;
};
struct ConstantMarginal {
    double value = 0.0;
};

using Marginal =
    std::variant<UniformMarginal, ExponentialMarginal, NormalMarginal, TwoPointMarginal, ConstantMarginal>;

// Throws InvalidSpec on bad parameters.
void validate(const Marginal& m);
bool is_nonnegative(const Marginal& m);
double mean_of(const Marginal& m);
std::string describe(const Marginal& m);

// Uniform draws consumed per sample: 0 (constant), 1, or 2 (normal).
double sample(const Marginal& m, PhiloxStream& stream);

struct GaussianPair {
    double mean1 = 0.0;
    double mean2 = 0.0;
    double sd1 = 1.0;
    double sd2 = 1.0;
    double rho = 0.0;
};

struct IndependentProduct {
    Marginal first;
    Marginal second;
};

// Nondecreasing maps for comonotone couplings x2 = map(x1).
enum class MonotoneMap { Identity, Double, Exp, Cube };

std::string_view to_string(MonotoneMap map);
MonotoneMap parse_monotone_map(std::string_view name);
double apply(MonotoneMap map, double x);

struct Comonotone {
    Marginal marginal;
    MonotoneMap map = MonotoneMap::Identity;
};

using SamplerFamily = std::variant<GaussianPair, IndependentProduct, Comonotone>;

struct SamplerSpec {
    SamplerFamily family;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
};

inline constexpr std::uint64_t kChunkPairs = std::uint64_t{1} << 16;
inline constexpr std::size_t kBatchCount = 100;

void validate(const SamplerSpec& spec);
std::string describe(const SamplerSpec& spec);

// All n pairs, in order. Memory is O(n); estimate_gap does not use this.
std::vector<std::pair<double, double>> sample_pairs(const SamplerSpec& spec);

struct EstimateReport {
    double gap_estimate = 0.0;
    double gap_formula_estimate = 0.0;
    double standard_error = 0.0;
    double ci95_lo = 0.0;
    double ci95_hi = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::size_t batches = 0;

    double cov_min_max = 0.0;
    double cov_pair = 0.0;
};

// Plug-in (1/n) covariances on the full sample; standard error from batch
// means over min(100, n/2) contiguous batches. With a single batch the
// standard error is +inf. threads == 0 means "auto" (see worker_count).
EstimateReport estimate_gap(const SamplerSpec& spec, std::size_t threads = 0);

// Closed-form gap for a standard bivariate normal pair: (1 - rho) / pi.
double gaussian_gap_oracle(double rho);

// hardware_concurrency, capped by TRUNCVAR_THREADS when set to a positive integer.
std::size_t worker_count();

// Specs used by the statistical soundness suite.
std::vector<SamplerSpec> builtin_specs(std::uint64_t seed, std::uint64_t n);

}  // namespace truncvar
