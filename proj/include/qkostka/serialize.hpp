#pragma once

// JSON records for CLI output. Keys keep insertion order so identical inputs
// give identical bytes.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qkostka/bundles.hpp"
#include "qkostka/chern.hpp"
#include "qkostka/fills.hpp"

namespace qkostka {

using Json = nlohmann::ordered_json;

inline Json natural_json(const Natural& v) {
    if (v <= Natural(std::numeric_limits<std::int64_t>::max()))
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline Json rational_json(const Rational& v) {
    if (denominator(v) == 1)
        return natural_json(numerator(v));
    return numerator(v).str() + "/" + denominator(v).str();
}

inline std::string algebra_name(int m) { return "sl" + std::to_string(2 * m); }

inline Json bundle_record(const BundleSpec& spec, const Classification& cls,
                          const std::optional<Natural>& exact_rank = std::nullopt) {
    Json j;
    j["algebra"] = algebra_name(spec.m);
    j["level"] = spec.level;
    j["weights"] = spec.weights;
    if (spec.total() % 2 == 0)
        j["s"] = witten_s(spec);
    else
        j["s"] = nullptr;
    j["k"] = cls.certificate.k;
    j["p"] = cls.certificate.p;
    j["lambda_tail"] = cls.certificate.tail_sum;
    j["maximal"] = cls.certificate.maximal;
    j["class"] = to_string(cls.rank_class);
    j["reason"] = to_string(cls.reason);
    if (exact_rank)
        j["exact_rank"] = natural_json(*exact_rank);
    return j;
}

inline Json tableau_json(const Tableau& t) {
    Json j;
    j["shape"] = t.shape().outer().rows();
    if (!t.shape().is_straight())
        j["inner"] = t.shape().inner().rows();
    j["entries"] = t.grid();
    return j;
}

inline Json combo_json(const DivisorCombo& combo) {
    Json j;
    j["scale"] = combo.scale;
    j["branch"] = combo.branch;
    j["order"] = combo.order;
    Json terms = Json::array();
    for (const auto& t : combo.terms) {
        Json term;
        term["coefficient"] = t.coefficient;
        term["label"] = t.vector.label();
        term["support"] = t.vector.support;
        term["A"] = t.vector.a;
        term["B"] = t.vector.b;
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Json report_json(const VerificationReport& report) {
    Json j;
    if (report.precondition_error) {
        j["error"] = *report.precondition_error;
        return j;
    }
    j["curves"] = report.checks.size();
    j["violations"] = report.violations();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json r;
        r["curve"] = c.curve.blocks;
        r["lhs"] = natural_json(c.lhs);
        r["rhs"] = natural_json(c.rhs);
        r["ok"] = c.ok;
        checks.push_back(std::move(r));
    }
    j["checks"] = std::move(checks);
    return j;
}

} // namespace qkostka
