#pragma once

#include <json.hpp>

#include "mpulam/bounds.hpp"
#include "mpulam/core.hpp"
#include "mpulam/enumerate.hpp"
#include "mpulam/metric.hpp"
#include "mpulam/spheres.hpp"
#include "mpulam/verify.hpp"

// JSON views of the report types. Keys are snake_case; big integers and
// rationals are serialized as decimal strings so no reader ever rounds them.
// Sequences use the text tuple format ("1,3,1,2,2,3").

namespace mpulam {

using json = nlohmann::json;

inline json to_json(const DuplicationReport& report) {
    return json{{"n", report.n},
                {"r", report.r},
                {"center", format_tuple(report.center.symbols())},
                {"size_t", report.size_T},
                {"size_d", report.size_D},
                {"size_e", report.size_E},
                {"sphere_size_formula", report.sphere_size_formula},
                {"sphere_size_enumerated", report.sphere_size_enumerated}};
}

inline json to_json(const BoundReport& report) {
    json out{{"n", report.n},
             {"r", report.r},
             {"space_size", to_decimal(report.space_size)},
             {"bound_rational", to_fraction(report.bound_value)},
             {"bound_integer", to_decimal(report.bound_integer)},
             {"bound_kind", to_string(report.kind)}};
    if (report.d) out["d"] = *report.d;
    if (report.t) out["t"] = *report.t;
    return out;
}

inline json to_json(const CodeSet& code) {
    json words = json::array();
    for (const auto& m : code.codewords) words.push_back(format_tuple(m.symbols()));
    return json{{"codewords", words},
                {"size", code.codewords.size()},
                {"min_distance", code.min_distance}};
}

inline json to_json(const DistanceResult& result) {
    json out{{"distance", result.distance}, {"lcs", result.lcs}};
    if (result.witness) {
        out["witness_a"] = format_tuple(result.witness->first);
        out["witness_b"] = format_tuple(result.witness->second);
    }
    return out;
}

inline json to_json(const ExtremalScanResult& scan) {
    return json{{"min_center", format_tuple(scan.min_center.symbols())},
                {"min_size", scan.min_size},
                {"max_center", format_tuple(scan.max_center.symbols())},
                {"max_size", scan.max_size}};
}

inline json to_json(const CheckResult& check) {
    json out{{"suite", check.suite}, {"name", check.name}, {"status", check.passed ? "pass" : "fail"}};
    if (!check.detail.empty()) out["detail"] = check.detail;
    if (!check.counterexample.empty()) out["counterexample"] = check.counterexample;
    return out;
}

}  // namespace mpulam
