#include "truncvar/verification.hpp"

#include <algorithm>
#include <random>

namespace truncvar {

namespace {

class Auditor {
   public:
    explicit Auditor(std::vector<NamedVariable> vars) : vars_(std::move(vars)) {}

    void expect(bool ok, const char* property, const std::string& detail = {}) {
        if (!ok) out_.push_back({property, detail, vars_});
    }

    std::vector<Violation> take() { return std::move(out_); }

   private:
    std::vector<NamedVariable> vars_;
    std::vector<Violation> out_;
};

bool same_gap_report(const GapReport& a, const GapReport& b) {
    return a.cov_min_max == b.cov_min_max && a.cov_pair == b.cov_pair && a.gap == b.gap &&
           a.gap_via_formula == b.gap_via_formula && a.var_sum_pair == b.var_sum_pair &&
           a.var_sum_minmax == b.var_sum_minmax;
}

// Re-check a covariance certificate with dist_core primitives only.
bool certificate_rechecks(const EqualityCertificate& cert, const RandomVariable& x1,
                          const RandomVariable& x2) {
    if (cert.kind == EqualityCertificate::Kind::Strict) {
        if (!cert.first_below_witness || !cert.second_below_witness) return false;
        const auto i = *cert.first_below_witness;
        const auto j = *cert.second_below_witness;
        return x1[i] < x2[i] && x2[j] < x1[j];
    }
    if (!cert.direction) return false;
    switch (*cert.direction) {
        case DominanceDirection::FirstDominates:
            return dominates_as(x1, x2).holds && !dominates_as(x2, x1).holds;
        case DominanceDirection::SecondDominates:
            return dominates_as(x2, x1).holds && !dominates_as(x1, x2).holds;
        case DominanceDirection::Both:
            return x1.pointwise_equal(x2);
    }
    return false;
}

int swapped_condition(int index) {
    switch (index) {
        case 1: return 3;
        case 2: return 4;
        case 3: return 1;
        case 4: return 2;
    }
    return 0;
}

template <class T>
void append_capped(std::vector<T>& dst, std::size_t& count, std::vector<T>&& src) {
    count += src.size();
    for (auto& v : src) {
        if (dst.size() >= kMaxReportedViolations) break;
        dst.push_back(std::move(v));
    }
}

// Portable draws: the standard distributions are implementation-defined, so
// map raw engine output by hand.
class Draw {
   public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    Rational rational(std::int64_t num_bound, std::int64_t den_max) {
        Rational r(static_cast<long>(integer(-num_bound, num_bound)),
                   static_cast<unsigned long>(integer(1, den_max)));
        r.canonicalize();
        return r;
    }

    SampleSpace space(std::size_t max_outcomes) {
        const auto n = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_outcomes)));
        std::vector<long> weights(n);
        long total = 0;
        for (auto& w : weights) {
            w = static_cast<long>(integer(1, 20));
            total += w;
        }
        std::vector<Rational> probs;
        for (auto w : weights) {
            Rational p(w, total);
            p.canonicalize();
            probs.push_back(p);
        }
        return make_space(probs);
    }

    RandomVariable variable(const SampleSpace& space) {
        std::vector<Rational> values;
        for (std::size_t i = 0; i < space.size(); ++i) values.push_back(rational(30, 8));
        return RandomVariable(space, std::move(values));
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace

std::vector<Violation> audit_pair(const RandomVariable& x1, const RandomVariable& x2) {
    Auditor a({{"X1", x1}, {"X2", x2}});
    const auto y = pointwise_min(x1, x2);
    const auto z = pointwise_max(x1, x2);
    a.expect((y + z).pointwise_equal(x1 + x2), "min_plus_max");
    a.expect((y * z).pointwise_equal(x1 * x2), "min_times_max");

    const auto r = covariance_gap(x1, x2);
    a.expect(r.gap == r.gap_via_formula, "gap_identity",
             to_string(r.gap) + " != " + to_string(r.gap_via_formula));
    a.expect(r.var_sum_minmax + 2 * r.gap == r.var_sum_pair, "variance_conservation");
    a.expect(sgn(r.gap) >= 0, "gap_nonnegative", to_string(r.gap));

    const auto cert = certify_cov_equality(x1, x2);
    a.expect((r.gap == 0) == cert.is_equal(), "cov_equality_iff_dominance",
             "gap " + to_string(r.gap) + ", certificate " + std::string(to_string(cert.kind)));
    a.expect(certificate_rechecks(cert, x1, x2), "cov_certificate_recheck");

    const auto vs = variance_sum_check(x1, x2);
    a.expect(vs.lhs <= vs.rhs, "variance_sum_bound");
    a.expect(vs.equal == cert.is_equal(), "variance_sum_equality_iff_dominance");

    const auto mcert = certify_min_variance_equality(x1, x2);
    const bool min_equal = variance(y) == variance(x1) + variance(x2);
    a.expect(min_equal == mcert.is_equal(), "min_variance_characterization",
             "var(min) " + to_string(variance(y)) + ", var sum " +
                 to_string(variance(x1) + variance(x2)));
    if (mcert.is_equal()) {
        a.expect(mcert.constant_value && z.constant_value() == mcert.constant_value,
                 "min_variance_constant_recheck");
    }

    a.expect(positive_correlation_check(x1, x2), "positive_correlation");
    a.expect(same_gap_report(r, covariance_gap(x2, x1)), "gap_symmetry");
    return a.take();
}

std::vector<Violation> audit_triple(const RandomVariable& x, const RandomVariable& x1,
                                    const RandomVariable& x2) {
    Auditor a({{"X", x}, {"X1", x1}, {"X2", x2}});
    const auto b = clamp_variance_bound(x, x1, x2);
    a.expect(b.var_clamp <= b.var_sum, "clamp_variance_bound",
             to_string(b.var_clamp) + " > " + to_string(b.var_sum));

    const auto cert = classify_clamp_equality(x, x1, x2);
    a.expect((b.var_clamp == b.var_sum) == cert.is_equal(), "clamp_equality_characterization",
             "var_clamp " + to_string(b.var_clamp) + ", var_sum " + to_string(b.var_sum) +
                 ", conditions " + std::to_string(cert.satisfied_conditions.size()));

    auto swapped = classify_clamp_equality(x1, x, x2).satisfied_conditions;
    for (auto& c : swapped) c.index = swapped_condition(c.index);
    std::sort(swapped.begin(), swapped.end(),
              [](const ClampCondition& l, const ClampCondition& r) { return l.index < r.index; });
    a.expect(swapped == cert.satisfied_conditions, "clamp_swap_symmetry");
    return a.take();
}

const std::vector<std::vector<Rational>>& probability_menu() {
    static const std::vector<std::vector<Rational>> menu = {
        {Rational(1)},
        {Rational(1, 2), Rational(1, 2)},
        {Rational(1, 2), Rational(1, 4), Rational(1, 4)},
        {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)},
    };
    return menu;
}

SweepSummary exhaustive_sweep(std::size_t max_outcomes, const std::vector<Rational>& value_set) {
    SweepSummary summary;
    if (value_set.empty()) return summary;

    for (const auto& probs : probability_menu()) {
        if (probs.size() > max_outcomes) continue;
        const auto space = make_space(probs);
        ++summary.spaces;

        // All |V|^n value vectors, odometer order.
        std::vector<RandomVariable> vars;
        std::vector<std::size_t> digits(probs.size(), 0);
        for (;;) {
            std::vector<Rational> values;
            for (auto d : digits) values.push_back(value_set[d]);
            vars.emplace_back(space, std::move(values));
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == value_set.size()) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }

        for (const auto& x1 : vars) {
            for (const auto& x2 : vars) {
                ++summary.pair_instances;
                append_capped(summary.violations, summary.violation_count, audit_pair(x1, x2));
                if (certify_cov_equality(x1, x2).is_equal()) ++summary.cov_equalities;
                if (certify_min_variance_equality(x1, x2).is_equal()) {
                    ++summary.min_variance_equalities;
                }
                for (const auto& x : vars) {
                    ++summary.triple_instances;
                    append_capped(summary.violations, summary.violation_count,
                                  audit_triple(x, x1, x2));
                    if (classify_clamp_equality(x, x1, x2).is_equal()) ++summary.clamp_equalities;
                }
            }
        }
    }
    return summary;
}

RandomizedSummary randomized_identities(std::uint64_t seed, std::size_t cases) {
    RandomizedSummary summary;
    Draw draw(seed);
    for (std::size_t k = 0; k < cases; ++k) {
        const auto space = draw.space(6);
        const auto x = draw.variable(space);
        const auto x1 = draw.variable(space);
        auto x2 = draw.variable(space);
        // A quarter of the cases force dominance so the equality branches run.
        if (draw.integer(0, 3) == 0) {
            std::vector<Rational> below;
            for (std::size_t i = 0; i < space.size(); ++i) {
                below.emplace_back(x1[i] - abs(draw.rational(5, 4)));
            }
            x2 = RandomVariable(space, std::move(below));
        }
        ++summary.cases;
        append_capped(summary.violations, summary.violation_count, audit_pair(x1, x2));
        append_capped(summary.violations, summary.violation_count, audit_triple(x, x1, x2));

        std::vector<Violation> extra;
        const Rational scale = draw.rational(10, 5);
        const Rational shift = draw.rational(10, 5);
        if (covariance(affine(x, scale, shift), x1) != scale * covariance(x, x1)) {
            extra.push_back({"covariance_affine", {}, {{"X", x}, {"X1", x1}}});
        }
        Rational lo = draw.rational(30, 8);
        Rational hi = draw.rational(30, 8);
        if (hi < lo) std::swap(lo, hi);
        const auto clamped = clamp(x, RandomVariable::constant(space, lo),
                                   RandomVariable::constant(space, hi));
        if (variance(x) < variance(clamped)) {
            extra.push_back({"constant_clamp_shrinks_variance",
                             "bounds [" + to_string(lo) + ", " + to_string(hi) + "]",
                             {{"X", x}}});
        }
        append_capped(summary.violations, summary.violation_count, std::move(extra));
    }
    return summary;
}

RandomizedSummary randomized_monotonicity(std::uint64_t seed, std::size_t cases,
                                          std::size_t grid_points) {
    RandomizedSummary summary;
    Draw draw(seed);
    for (std::size_t k = 0; k < cases; ++k) {
        const auto space = draw.space(8);
        const auto x = draw.variable(space);

        // Distinct grid points over a range covering X with margin on both sides.
        std::vector<Rational> grid;
        while (grid.size() < grid_points) {
            grid.push_back(draw.rational(40, 8));
            std::sort(grid.begin(), grid.end());
            grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        }
        ++summary.cases;
        std::vector<Violation> found;
        for (auto mode : {CurveMode::Min, CurveMode::Max}) {
            const auto curve = variance_monotonicity_curve(x, grid, mode);
            if (!curve.is_monotone()) {
                found.push_back({mode == CurveMode::Min ? "min_curve_non_decreasing"
                                                        : "max_curve_non_increasing",
                                 {}, {{"X", x}}});
            }
        }
        append_capped(summary.violations, summary.violation_count, std::move(found));
    }
    return summary;
}

}  // namespace truncvar
