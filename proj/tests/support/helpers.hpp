#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <truncvar/dist_core.hpp>

#include "support/oracle.hpp"

namespace testutil {

using truncvar::Rational;

inline Rational q(long num, long den = 1) {
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

inline truncvar::SampleSpace space(std::initializer_list<Rational> probs) {
    std::vector<Rational> p(probs);
    return truncvar::make_space(p);
}

inline truncvar::SampleSpace uniform_space(std::size_t n) {
    return truncvar::make_space(std::vector<Rational>(n, q(1, static_cast<long>(n))));
}

inline truncvar::RandomVariable rv(const truncvar::SampleSpace& s, std::initializer_list<Rational> values) {
    return truncvar::RandomVariable(s, std::vector<Rational>(values));
}

inline oracle::Frac frac(const Rational& r) {
    return oracle::Frac(r.get_num().get_si(), r.get_den().get_si());
}

inline oracle::Vec fracs(std::span<const Rational> values) {
    oracle::Vec out;
    for (const auto& v : values) out.push_back(frac(v));
    return out;
}

inline oracle::Vec probs(const truncvar::SampleSpace& s) {
    oracle::Vec out;
    for (const auto& o : s.outcomes()) out.push_back(frac(o.p));
    return out;
}

inline std::string str(const Rational& r) { return truncvar::to_string(r); }

// The three-outcome example: P = (1/2, 1/4, 1/4), X = (0,1,1), X1 = 2, X2 = (2,0,1).
struct PaperExample {
    truncvar::SampleSpace s = space({q(1, 2), q(1, 4), q(1, 4)});
    truncvar::RandomVariable x = rv(s, {0, 1, 1});
    truncvar::RandomVariable x1 = truncvar::RandomVariable::constant(s, 2);
    truncvar::RandomVariable x2 = rv(s, {2, 0, 1});
};

// Independent Bernoulli(1/2) pair on four equally likely outcomes.
struct BernoulliPair {
    truncvar::SampleSpace s = uniform_space(4);
    truncvar::RandomVariable x1 = rv(s, {0, 0, 1, 1});
    truncvar::RandomVariable x2 = rv(s, {0, 1, 0, 1});
};

}  // namespace testutil
