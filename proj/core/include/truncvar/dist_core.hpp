#pragma once

// Finite discrete joint distributions with exact rational probabilities.
//
// A SampleSpace is the coupling: every RandomVariable built on the same space
// is jointly defined outcome by outcome. Variables from different spaces are
// never combined; attempting it raises ErrorCode::SpaceMismatch.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "truncvar/errors.hpp"
#include "truncvar/rational.hpp"

namespace truncvar {

struct Outcome {
    std::string id;
    Rational p;
};

class SampleSpace {
   public:
    // Outcome ids default to "w1", "w2", ...
    static SampleSpace make(std::span<const Rational> probs);
    static SampleSpace make(std::vector<Outcome> outcomes);

    std::size_t size() const noexcept { return outcomes_->size(); }
    std::span<const Outcome> outcomes() const noexcept { return *outcomes_; }
    const Outcome& outcome(std::size_t i) const { return (*outcomes_)[i]; }
    const Rational& p(std::size_t i) const { return (*outcomes_)[i].p; }

    // Identity, not structural equality: two spaces built from the same
    // probabilities are still distinct couplings.
    bool same_as(const SampleSpace& other) const noexcept { return outcomes_ == other.outcomes_; }

   private:
    explicit SampleSpace(std::shared_ptr<const std::vector<Outcome>> outcomes)
        : outcomes_(std::move(outcomes)) {}

    std::shared_ptr<const std::vector<Outcome>> outcomes_;
};

SampleSpace make_space(std::span<const Rational> probs);

class RandomVariable {
   public:
    RandomVariable(SampleSpace space, std::vector<Rational> values);

    static RandomVariable constant(const SampleSpace& space, const Rational& value);

    const SampleSpace& space() const noexcept { return space_; }
    std::span<const Rational> values() const noexcept { return values_; }
    const Rational& operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

    // The common value when X is the same on every outcome.
    std::optional<Rational> constant_value() const;
    bool is_constant() const { return constant_value().has_value(); }

    const Rational& min_value() const;
    const Rational& max_value() const;

    // Exact outcome-wise equality of values (spaces must match).
    bool pointwise_equal(const RandomVariable& other) const;

   private:
    SampleSpace space_;
    std::vector<Rational> values_;
};

void require_same_space(const RandomVariable& a, const RandomVariable& b);

RandomVariable operator+(const RandomVariable& a, const RandomVariable& b);
RandomVariable operator*(const RandomVariable& a, const RandomVariable& b);
// scale * X + shift
RandomVariable affine(const RandomVariable& x, const Rational& scale, const Rational& shift);

struct MomentReport {
    Rational mean;
    Rational variance;
    Rational second_moment;
};

Rational expectation(const RandomVariable& x);
Rational covariance(const RandomVariable& x, const RandomVariable& w);
Rational variance(const RandomVariable& x);
MomentReport moments(const RandomVariable& x);

RandomVariable pointwise_min(const RandomVariable& x, const RandomVariable& w);
RandomVariable pointwise_max(const RandomVariable& x, const RandomVariable& w);

// min(upper, max(x, lower)). Total: crossed bounds are allowed and give
// whatever the formula gives.
RandomVariable clamp(const RandomVariable& x, const RandomVariable& lower,
                     const RandomVariable& upper);

// x where a <= x <= c, else 0. Throws InvalidInterval if a > c.
RandomVariable indicator_truncate(const RandomVariable& x, const Rational& a, const Rational& c);

struct DominanceResult {
    bool holds = false;
    // Index of an outcome with x < w when dominance fails (the first one).
    std::optional<std::size_t> witness;
    std::string witness_id;

    explicit operator bool() const noexcept { return holds; }
};

// x >= w almost surely. All outcomes carry positive mass, so this is a
// pointwise check over the space.
DominanceResult dominates_as(const RandomVariable& x, const RandomVariable& w);

}  // namespace truncvar
