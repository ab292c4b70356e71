#include "truncvar/dist_core.hpp"

#include <algorithm>

namespace truncvar {

SampleSpace SampleSpace::make(std::span<const Rational> probs) {
    std::vector<Outcome> outcomes;
    outcomes.reserve(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        outcomes.push_back({"w" + std::to_string(i + 1), probs[i]});
    }
    return make(std::move(outcomes));
}

SampleSpace SampleSpace::make(std::vector<Outcome> outcomes) {
    if (outcomes.empty()) {
        throw Error(ErrorCode::EmptySpace, "a sample space needs at least one outcome");
    }
    Rational total = 0;
    for (const auto& o : outcomes) {
        if (sgn(o.p) <= 0) {
            throw Error(ErrorCode::NonPositiveProbability,
                        "outcome '" + o.id + "' has probability " + to_string(o.p) +
                            "; every probability must be > 0");
        }
        total += o.p;
    }
    if (total != 1) throw ProbabilitySumError(Rational(1 - total));
    return SampleSpace(std::make_shared<const std::vector<Outcome>>(std::move(outcomes)));
}

SampleSpace make_space(std::span<const Rational> probs) { return SampleSpace::make(probs); }

RandomVariable::RandomVariable(SampleSpace space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "random variable has " + std::to_string(values_.size()) +
                        " values but the space has " + std::to_string(space_.size()) +
                        " outcomes");
    }
}

RandomVariable RandomVariable::constant(const SampleSpace& space, const Rational& value) {
    return RandomVariable(space, std::vector<Rational>(space.size(), value));
}

std::optional<Rational> RandomVariable::constant_value() const {
    const auto& first = values_.front();
    for (const auto& v : values_) {
        if (v != first) return std::nullopt;
    }
    return first;
}

const Rational& RandomVariable::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

const Rational& RandomVariable::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

bool RandomVariable::pointwise_equal(const RandomVariable& other) const {
    require_same_space(*this, other);
    return values_ == other.values_;
}

void require_same_space(const RandomVariable& a, const RandomVariable& b) {
    if (!a.space().same_as(b.space())) {
        throw Error(ErrorCode::SpaceMismatch,
                    "random variables are defined on different sample spaces");
    }
}

namespace {

template <class Fn>
RandomVariable combine(const RandomVariable& a, const RandomVariable& b, Fn fn) {
    require_same_space(a, b);
    std::vector<Rational> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(fn(a[i], b[i]));
    return RandomVariable(a.space(), std::move(out));
}

}  // namespace

RandomVariable operator+(const RandomVariable& a, const RandomVariable& b) {
    return combine(a, b, [](const Rational& u, const Rational& v) { return Rational(u + v); });
}

RandomVariable operator*(const RandomVariable& a, const RandomVariable& b) {
    return combine(a, b, [](const Rational& u, const Rational& v) { return Rational(u * v); });
}

RandomVariable affine(const RandomVariable& x, const Rational& scale, const Rational& shift) {
    std::vector<Rational> out;
    out.reserve(x.size());
    for (const auto& v : x.values()) out.emplace_back(scale * v + shift);
    return RandomVariable(x.space(), std::move(out));
}

Rational expectation(const RandomVariable& x) {
    Rational sum = 0;
    const auto& space = x.space();
    for (std::size_t i = 0; i < x.size(); ++i) sum += space.p(i) * x[i];
    return sum;
}

Rational covariance(const RandomVariable& x, const RandomVariable& w) {
    require_same_space(x, w);
    const auto& space = x.space();
    Rational ex = 0, ew = 0, exw = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Rational& p = space.p(i);
        ex += p * x[i];
        ew += p * w[i];
        exw += p * x[i] * w[i];
    }
    return exw - ex * ew;
}

Rational variance(const RandomVariable& x) { return moments(x).variance; }

MomentReport moments(const RandomVariable& x) {
    const auto& space = x.space();
    Rational mean = 0, second = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Rational& p = space.p(i);
        mean += p * x[i];
        second += p * x[i] * x[i];
    }
    Rational var = second - mean * mean;
    return {std::move(mean), std::move(var), std::move(second)};
}

RandomVariable pointwise_min(const RandomVariable& x, const RandomVariable& w) {
    return combine(x, w, [](const Rational& u, const Rational& v) { return u < v ? u : v; });
}

RandomVariable pointwise_max(const RandomVariable& x, const RandomVariable& w) {
    return combine(x, w, [](const Rational& u, const Rational& v) { return u < v ? v : u; });
}

RandomVariable clamp(const RandomVariable& x, const RandomVariable& lower,
                     const RandomVariable& upper) {
    require_same_space(x, lower);
    require_same_space(x, upper);
    return pointwise_min(upper, pointwise_max(x, lower));
}

RandomVariable indicator_truncate(const RandomVariable& x, const Rational& a, const Rational& c) {
    if (a > c) {
        throw Error(ErrorCode::InvalidInterval,
                    "indicator truncation needs a <= c, got a = " + to_string(a) +
                        ", c = " + to_string(c));
    }
    std::vector<Rational> out;
    out.reserve(x.size());
    for (const auto& v : x.values()) out.emplace_back(a <= v && v <= c ? v : Rational(0));
    return RandomVariable(x.space(), std::move(out));
}

DominanceResult dominates_as(const RandomVariable& x, const RandomVariable& w) {
    require_same_space(x, w);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < w[i]) return {false, i, x.space().outcome(i).id};
    }
    return {true, std::nullopt, {}};
}

}  // namespace truncvar
