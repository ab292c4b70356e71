#include <gtest/gtest.h>

#include <truncvar/verification.hpp>

#include "support/helpers.hpp"

using namespace truncvar;
using namespace testutil;

namespace {

// Every value vector over `values` of length n.
std::vector<oracle::Vec> all_vectors(std::size_t n, const std::vector<long>& values) {
    std::vector<oracle::Vec> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<oracle::Vec> next;
        for (const auto& prefix : out) {
            for (long v : values) {
                auto ext = prefix;
                ext.emplace_back(v);
                next.push_back(ext);
            }
        }
        out = std::move(next);
    }
    return out;
}

RandomVariable to_rv(const SampleSpace& s, const oracle::Vec& v) {
    std::vector<Rational> values;
    for (const auto& f : v) values.push_back(q(f.num, f.den));
    return RandomVariable(s, values);
}

}  // namespace

// The characterizations decided by pointwise certificates must agree with the
// moment equations evaluated by the independent oracle arithmetic.
TEST(Characterization, CertificatesAgreeWithOracleMoments) {
    const std::vector<long> values{-1, 0, 2};
    for (const auto& menu : probability_menu()) {
        if (menu.size() > 3) continue;
        const auto s = make_space(menu);
        const auto p = probs(s);
        const auto vecs = all_vectors(menu.size(), values);
        for (const auto& a : vecs) {
            for (const auto& b : vecs) {
                const auto lo = oracle::vmin(a, b), hi = oracle::vmax(a, b);
                const bool gap_zero = oracle::cov(p, lo, hi) == oracle::cov(p, a, b);
                const bool dominance = oracle::dominates(a, b) || oracle::dominates(b, a);
                ASSERT_EQ(gap_zero, dominance);

                const auto x1 = to_rv(s, a), x2 = to_rv(s, b);
                ASSERT_EQ(certify_cov_equality(x1, x2).is_equal(), gap_zero);
                const bool min_eq = oracle::var(p, lo) == oracle::var(p, a) + oracle::var(p, b);
                ASSERT_EQ(certify_min_variance_equality(x1, x2).is_equal(), min_eq);

                for (const auto& c : vecs) {
                    const auto clamped = oracle::vmin(b, oracle::vmax(c, a));
                    const bool clamp_eq = oracle::var(p, clamped) ==
                                          oracle::var(p, c) + oracle::var(p, a) + oracle::var(p, b);
                    ASSERT_EQ(classify_clamp_equality(to_rv(s, c), x1, x2).is_equal(), clamp_eq);
                }
            }
        }
    }
}

TEST(Audits, SmallSweepIsClean) {
    const auto summary = exhaustive_sweep(2, {0, 1, 2});
    EXPECT_EQ(summary.spaces, 2u);
    EXPECT_EQ(summary.pair_instances, 9u + 81u);
    EXPECT_EQ(summary.triple_instances, 27u + 729u);
    EXPECT_EQ(summary.violation_count, 0u);
    EXPECT_GT(summary.cov_equalities, 0u);
    EXPECT_GT(summary.clamp_equalities, 0u);
}

TEST(Audits, MenuIsFixed) {
    const auto& menu = probability_menu();
    ASSERT_EQ(menu.size(), 4u);
    EXPECT_EQ(menu[2], (std::vector<Rational>{q(1, 2), q(1, 4), q(1, 4)}));
    for (const auto& m : menu) {
        Rational total = 0;
        for (const auto& p : m) total += p;
        EXPECT_EQ(total, 1);
    }
}

TEST(Audits, RandomizedIdentitiesAreClean) {
    const auto r = randomized_identities(3, 400);
    EXPECT_EQ(r.cases, 400u);
    EXPECT_EQ(r.violation_count, 0u);
    EXPECT_TRUE(r.violations.empty());
}

TEST(Audits, RandomizedMonotonicityIsClean) {
    const auto r = randomized_monotonicity(5, 100, 16);
    EXPECT_EQ(r.cases, 100u);
    EXPECT_EQ(r.violation_count, 0u);
}

TEST(Audits, PaperInstancesAreClean) {
    PaperExample ex;
    EXPECT_TRUE(audit_pair(ex.x1, ex.x2).empty());
    EXPECT_TRUE(audit_pair(ex.x, ex.x2).empty());
    EXPECT_TRUE(audit_triple(ex.x, ex.x1, ex.x2).empty());
}

TEST(Symmetry, ClampClassifierSwapsConditionPairs) {
    const auto s = uniform_space(2);
    const auto x = rv(s, {1, 4});
    const auto lo = RandomVariable::constant(s, 0);
    const auto hi = RandomVariable::constant(s, 5);
    // X bracketed by constants satisfies (1); with X and X1 swapped the
    // constant sits in X's slot and (3) holds instead.
    EXPECT_EQ(classify_clamp_equality(x, lo, hi).satisfied_conditions[0].index, 1);
    const auto swapped = classify_clamp_equality(lo, x, hi);
    ASSERT_EQ(swapped.satisfied_conditions.size(), 1u);
    EXPECT_EQ(swapped.satisfied_conditions[0], (ClampCondition{3, 0, 5}));
}

TEST(Symmetry, GapReportIsSymmetric) {
    BernoulliPair b;
    const auto a = covariance_gap(b.x1, b.x2);
    const auto c = covariance_gap(b.x2, b.x1);
    EXPECT_EQ(a.gap, c.gap);
    EXPECT_EQ(a.gap_via_formula, c.gap_via_formula);
    EXPECT_EQ(a.var_sum_minmax, c.var_sum_minmax);
}
