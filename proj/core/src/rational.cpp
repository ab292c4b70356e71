#include "truncvar/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "truncvar/errors.hpp"

namespace truncvar {

std::string to_string(const Rational& value) {
    Rational canonical(value);
    canonical.canonicalize();
    return canonical.get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    Rational value(n, d);
    value.canonicalize();
    if (negative) value = -value;
    return value;
}

Rational from_double(double value) {
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::OutOfRange, "cannot represent a non-finite double as a rational");
    }
    return Rational(value);
}

double to_double(const Rational& value) { return value.get_d(); }

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveProbability: return "NonPositiveProbability";
        case ErrorCode::ProbabilitiesDoNotSumToOne: return "ProbabilitiesDoNotSumToOne";
        case ErrorCode::EmptySpace: return "EmptySpace";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::SpaceMismatch: return "SpaceMismatch";
        case ErrorCode::InvalidInterval: return "InvalidInterval";
        case ErrorCode::EmptyGrid: return "EmptyGrid";
        case ErrorCode::UnsortedGrid: return "UnsortedGrid";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::EmptyTrace: return "EmptyTrace";
        case ErrorCode::UnknownField: return "UnknownField";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

ProbabilitySumError::ProbabilitySumError(Rational deficit)
    : Error(ErrorCode::ProbabilitiesDoNotSumToOne,
            "probabilities sum to " + to_string(Rational(1 - deficit)) + ", deficit " +
                to_string(deficit)),
      deficit_(std::move(deficit)) {}

}  // namespace truncvar
