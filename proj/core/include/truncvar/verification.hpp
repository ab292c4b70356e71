#pragma once

// Property audits over the exact engine: every identity, bound and
// characterization in bounds.hpp checked on concrete instances, plus the
// exhaustive and randomized drivers that feed them.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "truncvar/bounds.hpp"

namespace truncvar {

struct NamedVariable {
    std::string name;
    RandomVariable value;
};

struct Violation {
    std::string property;
    std::string detail;
    std::vector<NamedVariable> variables;  // all on one space
};

// Pair invariants: min/max pointwise identities, gap identity and sign,
// variance conservation, certificate-vs-moment agreement for covariance and
// min-variance equality, positive-correlation remark, swap symmetry.
std::vector<Violation> audit_pair(const RandomVariable& x1, const RandomVariable& x2);

// Triple invariants: clamp variance bound, clamp-equality characterization,
// and the X <-> X1 symmetry of the characterization.
std::vector<Violation> audit_triple(const RandomVariable& x, const RandomVariable& x1,
                                    const RandomVariable& x2);

// The fixed probability menu for exhaustive sweeps:
// (1), (1/2,1/2), (1/2,1/4,1/4), (1/4,1/4,1/4,1/4).
const std::vector<std::vector<Rational>>& probability_menu();

struct SweepSummary {
    std::size_t spaces = 0;
    std::size_t pair_instances = 0;
    std::size_t triple_instances = 0;
    std::size_t cov_equalities = 0;
    std::size_t min_variance_equalities = 0;
    std::size_t clamp_equalities = 0;
    std::size_t violation_count = 0;
    std::vector<Violation> violations;  // first few only
};

// Every ordered pair and triple of variables with values in value_set on
// each menu space of at most max_outcomes outcomes.
SweepSummary exhaustive_sweep(std::size_t max_outcomes, const std::vector<Rational>& value_set);

struct RandomizedSummary {
    std::size_t cases = 0;
    std::size_t violation_count = 0;
    std::vector<Violation> violations;  // first few only
};

// Random rational spaces and triples; runs audit_pair, audit_triple and the
// single-variable properties (affine covariance, constant-bound clamp).
RandomizedSummary randomized_identities(std::uint64_t seed, std::size_t cases);

// Random X with strictly increasing grids of grid_points points.
RandomizedSummary randomized_monotonicity(std::uint64_t seed, std::size_t cases,
                                          std::size_t grid_points = 16);

inline constexpr std::size_t kMaxReportedViolations = 16;

}  // namespace truncvar
