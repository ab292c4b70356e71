#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace truncvar {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (lowest terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Canonical text form: "n" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);

// Strict parser for the text form: optional '-', digits, optionally '/' and
// a nonzero digit string. No whitespace, no '+', no decimals.
std::optional<Rational> parse_rational(std::string_view text);

// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double value);

double to_double(const Rational& value);

}  // namespace truncvar
