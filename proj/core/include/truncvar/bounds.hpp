#pragma once

// Covariance and variance bounds for min/max/clamp transforms of dependent
// pairs and triples, together with decision procedures for when each bound
// is attained.
//
// Every certificate is decided from the pointwise structure of the inputs
// (dominance, a.s.-constant variables) and never from the moment equation it
// characterizes, so comparing the two is a real check.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "truncvar/dist_core.hpp"

namespace truncvar {

// Y = min(X1, X2), Z = max(X1, X2).
struct GapReport {
    Rational cov_min_max;      // cov(Y, Z)
    Rational cov_pair;         // cov(X1, X2)
    Rational gap;              // cov_min_max - cov_pair
    Rational gap_via_formula;  // (E[X1] - E[Y]) * (E[X2] - E[Y])
    Rational var_sum_pair;     // var(X1) + var(X2)
    Rational var_sum_minmax;   // var(Y) + var(Z)
};

GapReport covariance_gap(const RandomVariable& x1, const RandomVariable& x2);

enum class DominanceDirection { FirstDominates, SecondDominates, Both };

std::string_view to_string(DominanceDirection d);

// One satisfied condition of the clamp-equality characterization, with the
// constants read off the data. c1 is the lower constant, c2 the upper one.
struct ClampCondition {
    int index = 0;  // 1..4
    Rational c1;
    Rational c2;

    friend bool operator==(const ClampCondition&, const ClampCondition&) = default;
};

struct EqualityCertificate {
    enum class Kind { Strict, EqualDominance, EqualConditions };

    Kind kind = Kind::Strict;
    std::optional<DominanceDirection> direction;

    // Strict covariance certificates: an outcome with X1 < X2 and one with
    // X2 < X1, which together refute dominance either way.
    std::optional<std::size_t> first_below_witness;
    std::optional<std::size_t> second_below_witness;

    // Min-variance certificates: the a.s. constant value of max(X1, X2).
    std::optional<Rational> constant_value;

    // Clamp certificates: every satisfied condition, in index order.
    std::vector<ClampCondition> satisfied_conditions;

    bool is_equal() const noexcept { return kind != Kind::Strict; }
};

std::string_view to_string(EqualityCertificate::Kind k);

// gap == 0 iff X1 >= X2 a.s. or X2 >= X1 a.s.
EqualityCertificate certify_cov_equality(const RandomVariable& x1, const RandomVariable& x2);

struct VarianceSumCheck {
    Rational lhs;  // var(Y) + var(Z)
    Rational rhs;  // var(X1) + var(X2)
    bool equal = false;
};

VarianceSumCheck variance_sum_check(const RandomVariable& x1, const RandomVariable& x2);

// var(min(X1,X2)) == var(X1) + var(X2) iff max(X1,X2) is a.s. a constant c
// and either X2 == c >= X1 or X1 == c >= X2 a.s.
EqualityCertificate certify_min_variance_equality(const RandomVariable& x1,
                                                  const RandomVariable& x2);

struct ClampBound {
    Rational var_clamp;  // var(min(X2, max(X, X1)))
    Rational var_sum;    // var(X) + var(X1) + var(X2)
};

ClampBound clamp_variance_bound(const RandomVariable& x, const RandomVariable& x1,
                                const RandomVariable& x2);

// Checks the four conditions under which var(clamp) reaches var_sum:
//   (1) X2 == c2, X1 == c1, c1 <= X <= c2
//   (2) X == c2, X1 == c1, c2 >= c1, X2 <= c2
//   (3) X2 == c2, X == c1, c1 <= X1 <= c2
//   (4) X1 == c2, X == c1, c2 >= c1, X2 <= c2
EqualityCertificate classify_clamp_equality(const RandomVariable& x, const RandomVariable& x1,
                                            const RandomVariable& x2);

enum class CurveMode { Min, Max };

struct MonotoneCurve {
    CurveMode mode = CurveMode::Min;
    std::vector<Rational> grid;
    std::vector<Rational> values;

    // Non-decreasing for Min, non-increasing for Max.
    bool is_monotone() const;
};

// var(min(X, s)) or var(max(X, s)) for each s on a strictly increasing grid.
MonotoneCurve variance_monotonicity_curve(const RandomVariable& x, std::span<const Rational> grid,
                                          CurveMode mode);

// cov(X1, X2) >= 0 implies cov(Y, Z) >= 0 on this instance.
bool positive_correlation_check(const RandomVariable& x1, const RandomVariable& x2);

}  // namespace truncvar
