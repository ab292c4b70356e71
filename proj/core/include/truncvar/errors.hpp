#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "truncvar/rational.hpp"

namespace truncvar {

enum class ErrorCode {
    NonPositiveProbability,
    ProbabilitiesDoNotSumToOne,
    EmptySpace,
    LengthMismatch,
    SpaceMismatch,
    InvalidInterval,
    EmptyGrid,
    UnsortedGrid,
    InvalidSpec,
    OutOfRange,
    InvalidConfig,
    EmptyTrace,
    UnknownField,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Base for every error raised by the library. Callers that only need a
// diagnostic can catch std::runtime_error; code() is for programmatic use.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

// Raised by make_space when the probabilities miss 1; carries 1 - sum exactly.
class ProbabilitySumError : public Error {
   public:
    explicit ProbabilitySumError(Rational deficit);

    const Rational& deficit() const noexcept { return deficit_; }

   private:
    Rational deficit_;
};

}  // namespace truncvar
