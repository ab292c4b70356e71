#include "truncvar/bounds.hpp"

namespace truncvar {

std::string_view to_string(DominanceDirection d) {
    switch (d) {
        case DominanceDirection::FirstDominates: return "X1>=X2";
        case DominanceDirection::SecondDominates: return "X2>=X1";
        case DominanceDirection::Both: return "both";
    }
    return "?";
}

std::string_view to_string(EqualityCertificate::Kind k) {
    switch (k) {
        case EqualityCertificate::Kind::Strict: return "Strict";
        case EqualityCertificate::Kind::EqualDominance: return "EqualDominance";
        case EqualityCertificate::Kind::EqualConditions: return "EqualConditions";
    }
    return "?";
}

GapReport covariance_gap(const RandomVariable& x1, const RandomVariable& x2) {
    require_same_space(x1, x2);
    const auto y = pointwise_min(x1, x2);
    const auto z = pointwise_max(x1, x2);

    const auto m1 = moments(x1);
    const auto m2 = moments(x2);
    const auto my = moments(y);
    const auto mz = moments(z);

    GapReport r;
    r.cov_min_max = covariance(y, z);
    r.cov_pair = covariance(x1, x2);
    r.gap = r.cov_min_max - r.cov_pair;
    r.gap_via_formula = (m1.mean - my.mean) * (m2.mean - my.mean);
    r.var_sum_pair = m1.variance + m2.variance;
    r.var_sum_minmax = my.variance + mz.variance;
    return r;
}

EqualityCertificate certify_cov_equality(const RandomVariable& x1, const RandomVariable& x2) {
    const auto first = dominates_as(x1, x2);
    const auto second = dominates_as(x2, x1);

    EqualityCertificate cert;
    if (first.holds || second.holds) {
        cert.kind = EqualityCertificate::Kind::EqualDominance;
        cert.direction = first.holds && second.holds ? DominanceDirection::Both
                         : first.holds               ? DominanceDirection::FirstDominates
                                                     : DominanceDirection::SecondDominates;
    } else {
        cert.kind = EqualityCertificate::Kind::Strict;
        cert.first_below_witness = first.witness;
        cert.second_below_witness = second.witness;
    }
    return cert;
}

VarianceSumCheck variance_sum_check(const RandomVariable& x1, const RandomVariable& x2) {
    require_same_space(x1, x2);
    VarianceSumCheck out;
    out.lhs = variance(pointwise_min(x1, x2)) + variance(pointwise_max(x1, x2));
    out.rhs = variance(x1) + variance(x2);
    out.equal = out.lhs == out.rhs;
    return out;
}

EqualityCertificate certify_min_variance_equality(const RandomVariable& x1,
                                                  const RandomVariable& x2) {
    require_same_space(x1, x2);
    EqualityCertificate cert;
    const auto c = pointwise_max(x1, x2).constant_value();
    if (!c) return cert;

    // max(X1,X2) == c already gives c >= both; the extra requirement is that
    // the dominating variable is the constant one.
    const auto k1 = x1.constant_value();
    const auto k2 = x2.constant_value();
    const bool first = k1 && *k1 == *c;
    const bool second = k2 && *k2 == *c;
    if (!first && !second) return cert;

    cert.kind = EqualityCertificate::Kind::EqualDominance;
    cert.direction = first && second ? DominanceDirection::Both
                     : first         ? DominanceDirection::FirstDominates
                                     : DominanceDirection::SecondDominates;
    cert.constant_value = *c;
    return cert;
}

ClampBound clamp_variance_bound(const RandomVariable& x, const RandomVariable& x1,
                                const RandomVariable& x2) {
    const auto clamped = clamp(x, x1, x2);
    return {variance(clamped), variance(x) + variance(x1) + variance(x2)};
}

namespace {

bool all_between(const RandomVariable& v, const Rational& lo, const Rational& hi) {
    for (const auto& value : v.values()) {
        if (value < lo || hi < value) return false;
    }
    return true;
}

bool all_at_most(const RandomVariable& v, const Rational& hi) {
    for (const auto& value : v.values()) {
        if (hi < value) return false;
    }
    return true;
}

}  // namespace

EqualityCertificate classify_clamp_equality(const RandomVariable& x, const RandomVariable& x1,
                                            const RandomVariable& x2) {
    require_same_space(x, x1);
    require_same_space(x, x2);

    const auto kx = x.constant_value();
    const auto k1 = x1.constant_value();
    const auto k2 = x2.constant_value();

    EqualityCertificate cert;
    auto& sat = cert.satisfied_conditions;
    if (k2 && k1 && all_between(x, *k1, *k2)) sat.push_back({1, *k1, *k2});
    if (kx && k1 && *kx >= *k1 && all_at_most(x2, *kx)) sat.push_back({2, *k1, *kx});
    if (k2 && kx && all_between(x1, *kx, *k2)) sat.push_back({3, *kx, *k2});
    if (k1 && kx && *k1 >= *kx && all_at_most(x2, *k1)) sat.push_back({4, *kx, *k1});

    if (!sat.empty()) cert.kind = EqualityCertificate::Kind::EqualConditions;
    return cert;
}

bool MonotoneCurve::is_monotone() const {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (mode == CurveMode::Min ? values[i] < values[i - 1] : values[i - 1] < values[i]) {
            return false;
        }
    }
    return true;
}

MonotoneCurve variance_monotonicity_curve(const RandomVariable& x, std::span<const Rational> grid,
                                          CurveMode mode) {
    if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "monotonicity grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) {
            throw Error(ErrorCode::UnsortedGrid, "monotonicity grid must be strictly increasing (index " +
                                                     std::to_string(i) + ")");
        }
    }
    MonotoneCurve curve;
    curve.mode = mode;
    curve.grid.assign(grid.begin(), grid.end());
    curve.values.reserve(grid.size());
    for (const auto& s : grid) {
        const auto level = RandomVariable::constant(x.space(), s);
        curve.values.push_back(
            variance(mode == CurveMode::Min ? pointwise_min(x, level) : pointwise_max(x, level)));
    }
    return curve;
}

bool positive_correlation_check(const RandomVariable& x1, const RandomVariable& x2) {
    if (sgn(covariance(x1, x2)) < 0) return true;
    return sgn(covariance(pointwise_min(x1, x2), pointwise_max(x1, x2))) >= 0;
}

}  // namespace truncvar
