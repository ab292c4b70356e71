#include "cli/documents.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

namespace truncvar::cli {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Rational rational_field(const json& node, const std::string& where) {
    if (!node.is_string()) parse_error(where + " must be a string like \"a/b\" or \"n\"");
    const auto text = node.get<std::string>();
    auto value = parse_rational(text);
    if (!value) parse_error(where + " \"" + text + "\" is not a valid rational");
    return *value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double number(std::string_view text, std::string_view context) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        parse_error("bad number '" + std::string(text) + "' in '" + std::string(context) + "'");
    }
    return v;
}

std::string outcome_label(std::size_t k) { return "outcome " + std::to_string(k + 1) + " (w" + std::to_string(k + 1) + ")"; }

}  // namespace

const RandomVariable& DistributionDocument::get(std::string_view name) const {
    for (const auto& v : variables) {
        if (v.name == name) return v.value;
    }
    throw Error(ErrorCode::UnknownField, "unknown variable '" + std::string(name) + "'");
}

DistributionDocument parse_distribution(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("outcomes")) parse_error("document needs an \"outcomes\" array");
    for (const auto& [key, _] : doc.items()) {
        if (key != "outcomes") parse_error("unexpected top-level key \"" + key + "\"");
    }
    const auto& outcomes = doc["outcomes"];
    if (!outcomes.is_array() || outcomes.empty()) parse_error("\"outcomes\" must be a nonempty array");

    std::vector<Rational> probs;
    std::set<std::string> names;
    std::vector<std::map<std::string, Rational>> rows;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        const auto& o = outcomes[k];
        const auto label = outcome_label(k);
        if (!o.is_object() || !o.contains("p") || !o.contains("vars")) {
            parse_error(label + " needs \"p\" and \"vars\"");
        }
        for (const auto& [key, _] : o.items()) {
            if (key != "p" && key != "vars") parse_error(label + " has unexpected key \"" + key + "\"");
        }
        probs.push_back(rational_field(o["p"], label + ": p"));
        if (!o["vars"].is_object()) parse_error(label + ": \"vars\" must be an object");

        std::map<std::string, Rational> row;
        for (const auto& [name, value] : o["vars"].items()) {
            row.emplace(name, rational_field(value, label + ": variable " + name));
        }
        std::set<std::string> these;
        for (const auto& [name, _] : row) these.insert(name);
        if (k == 0) {
            names = these;
        } else if (these != names) {
            parse_error(label + " declares a different variable set than outcome 1");
        }
        rows.push_back(std::move(row));
    }

    DistributionDocument out{make_space(probs), {}};
    for (const auto& name : names) {
        std::vector<Rational> values;
        for (const auto& row : rows) values.push_back(row.at(name));
        out.variables.push_back({name, RandomVariable(out.space, std::move(values))});
    }
    return out;
}

json distribution_json(const std::vector<NamedVariable>& variables) {
    json outcomes = json::array();
    if (variables.empty()) return json{{"outcomes", outcomes}};
    const auto& space = variables.front().value.space();
    for (std::size_t i = 0; i < space.size(); ++i) {
        json vars = json::object();
        for (const auto& v : variables) vars[v.name] = to_string(v.value[i]);
        outcomes.push_back({{"p", to_string(space.p(i))}, {"vars", vars}});
    }
    return json{{"outcomes", outcomes}};
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

json report_header(std::string_view command, std::string_view input_bytes) {
    return json{{"tool", kToolName},
                {"version", kToolVersion},
                {"command", command},
                {"input_digest", "sha256:" + sha256_hex(input_bytes)}};
}

json rational_json(const Rational& r) { return to_string(r); }

json to_json(const GapReport& r) {
    return json{{"cov_min_max", rational_json(r.cov_min_max)},
                {"cov_pair", rational_json(r.cov_pair)},
                {"gap", rational_json(r.gap)},
                {"gap_via_formula", rational_json(r.gap_via_formula)},
                {"var_sum_pair", rational_json(r.var_sum_pair)},
                {"var_sum_minmax", rational_json(r.var_sum_minmax)}};
}

json to_json(const EqualityCertificate& cert, const SampleSpace& space, bool with_conditions) {
    json j{{"kind", to_string(cert.kind)}};
    if (cert.direction) j["direction"] = to_string(*cert.direction);
    if (cert.first_below_witness || cert.second_below_witness) {
        json w = json::object();
        if (cert.first_below_witness) w["X1<X2"] = space.outcome(*cert.first_below_witness).id;
        if (cert.second_below_witness) w["X2<X1"] = space.outcome(*cert.second_below_witness).id;
        j["witnesses"] = w;
    }
    if (cert.constant_value) j["constant_value"] = rational_json(*cert.constant_value);
    if (with_conditions || !cert.satisfied_conditions.empty()) {
        json conds = json::array();
        for (const auto& c : cert.satisfied_conditions) {
            conds.push_back({{"index", c.index}, {"c1", rational_json(c.c1)}, {"c2", rational_json(c.c2)}});
        }
        j["satisfied_conditions"] = conds;
    }
    return j;
}

json to_json(const VarianceSumCheck& v) {
    return json{{"lhs", rational_json(v.lhs)}, {"rhs", rational_json(v.rhs)}, {"equal", v.equal}};
}

json to_json(const ClampBound& b) {
    return json{{"var_clamp", rational_json(b.var_clamp)}, {"var_sum", rational_json(b.var_sum)}};
}

json to_json(const MonotoneCurve& c) {
    json grid = json::array(), values = json::array();
    for (const auto& s : c.grid) grid.push_back(rational_json(s));
    for (const auto& v : c.values) values.push_back(rational_json(v));
    return json{{"mode", c.mode == CurveMode::Min ? "min" : "max"}, {"grid", grid}, {"values", values}};
}

json to_json(const EstimateReport& r) {
    return json{{"gap_estimate", r.gap_estimate},
                {"gap_formula_estimate", r.gap_formula_estimate},
                {"cov_min_max", r.cov_min_max},
                {"cov_pair", r.cov_pair},
                {"standard_error", r.standard_error},
                {"ci95", {r.ci95_lo, r.ci95_hi}},
                {"n", r.n},
                {"seed", r.seed},
                {"batches", r.batches}};
}

json to_json(const TraceSummary& s) {
    return json{{"mean", s.mean}, {"variance", s.variance}, {"min", s.min}, {"max", s.max}};
}

json to_json(const Violation& v) {
    return json{{"property", v.property}, {"detail", v.detail}, {"instance", distribution_json(v.variables)}};
}

Marginal parse_marginal(std::string_view text) {
    const auto parts = split(text, ':');
    const auto family = parts.front();
    auto arg = [&](std::size_t i) { return number(parts[i], text); };
    auto want = [&](std::size_t count) {
        if (parts.size() != count + 1) {
            parse_error("marginal '" + std::string(text) + "' expects " + std::to_string(count) +
                        " parameter(s)");
        }
    };
    Marginal m;
    if (family == "exp") {
        want(1);
        m = ExponentialMarginal{arg(1)};
    } else if (family == "uniform") {
        want(2);
        m = UniformMarginal{arg(1), arg(2)};
    } else if (family == "normal") {
        want(2);
        m = NormalMarginal{arg(1), arg(2)};
    } else if (family == "two_point") {
        want(3);
        m = TwoPointMarginal{arg(1), arg(2), arg(3)};
    } else if (family == "const") {
        want(1);
        m = ConstantMarginal{arg(1)};
    } else {
        parse_error("unknown marginal family '" + std::string(family) + "'");
    }
    return m;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    for (auto part : split(text, ',')) {
        auto r = parse_rational(part);
        if (!r) parse_error("'" + std::string(part) + "' is not a rational");
        out.push_back(*r);
    }
    return out;
}

json trace_record_json(const SimulationTrace& trace, std::size_t row) {
    json j = json::object();
    const auto& r = trace.rows[row];
    j[trace.fields[0]] = static_cast<std::uint64_t>(r[0]);
    for (std::size_t c = 1; c < trace.fields.size(); ++c) j[trace.fields[c]] = r[c];
    return j;
}

}  // namespace truncvar::cli
