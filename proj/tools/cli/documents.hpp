#pragma once

// JSON documents exchanged by the truncvar tool.
//
// DistributionDocument:
//   {"outcomes": [{"p": "1/2", "vars": {"X": "0", "X1": "2"}}, ...]}
// Probabilities and values are strings: an integer "n" or a fraction "a/b".
// Every outcome declares the same variable names. Outcome k is labelled "wk".
//
// Reports carry every rational in the same string form, plus the tool name,
// version and a SHA-256 digest of the input.

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

#include <truncvar/bounds.hpp>
#include <truncvar/models.hpp>
#include <truncvar/montecarlo.hpp>
#include <truncvar/verification.hpp>

namespace truncvar::cli {

using json = nlohmann::json;

inline constexpr std::string_view kToolName = "truncvar";
inline constexpr std::string_view kToolVersion = "1.0.0";

struct DistributionDocument {
    SampleSpace space;
    std::vector<NamedVariable> variables;  // sorted by name

    const RandomVariable& get(std::string_view name) const;  // throws UnknownField
};

// Throws Error(ParseError) naming the offending outcome, or the
// make_space errors for probability problems.
DistributionDocument parse_distribution(std::string_view text);

json distribution_json(const std::vector<NamedVariable>& variables);

std::string sha256_hex(std::string_view bytes);

// Report skeleton: tool, version, command, input_digest.
json report_header(std::string_view command, std::string_view input_bytes);

json rational_json(const Rational& r);
json to_json(const GapReport& r);
// with_conditions: always emit satisfied_conditions, even when empty.
json to_json(const EqualityCertificate& cert, const SampleSpace& space, bool with_conditions = false);
json to_json(const VarianceSumCheck& v);
json to_json(const ClampBound& b);
json to_json(const MonotoneCurve& c);
json to_json(const EstimateReport& r);
json to_json(const TraceSummary& s);
json to_json(const Violation& v);

// "exp:RATE", "uniform:A:B", "normal:MEAN:SD", "two_point:V1:V2:P", "const:V".
Marginal parse_marginal(std::string_view text);

// Comma-separated rationals, e.g. "0,1,2" or "-1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);

json trace_record_json(const SimulationTrace& trace, std::size_t row);

}  // namespace truncvar::cli
