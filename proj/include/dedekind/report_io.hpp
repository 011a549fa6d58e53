#pragma once

#include "identities.hpp"

#include <json.hpp>

#include <string>

namespace dedekind {

/// Rationals cross the JSON boundary as decimal strings; values exceed 64
/// bits well within the supported ranges.
inline nlohmann::json rational_to_json(const Rational& r) {
    return nlohmann::json{{"num", r.num().str()}, {"den", r.den().str()}};
}

inline nlohmann::json report_to_json(const SweepReport& report) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& entry : report.identities) {
        nlohmann::json counterexamples = nlohmann::json::array();
        for (const auto& ce : entry.counterexamples) {
            counterexamples.push_back({
                {"p", ce.p.str()},
                {"q", ce.q.str()},
                {"lhs", rational_to_json(ce.lhs)},
                {"rhs", rational_to_json(ce.rhs)},
            });
        }
        out.push_back({
            {"identity", std::string(identity_name(entry.id))},
            {"q_max", report.q_max},
            {"checked", entry.checked},
            {"passed", entry.passed},
            {"failed", entry.failed},
            {"skipped", entry.skipped},
            {"counterexamples", std::move(counterexamples)},
        });
    }
    return out;
}

/// CSV rendering: one row per recorded counterexample.
inline std::string report_to_csv(const SweepReport& report) {
    std::string out = "identity,p,q,applicable,passed,lhs,rhs\n";
    for (const auto& entry : report.identities) {
        for (const auto& ce : entry.counterexamples) {
            out += std::string(identity_name(entry.id));
            out += ',';
            out += ce.p.str();
            out += ',';
            out += ce.q.str();
            out += ',';
            out += ce.applicable ? "true" : "false";
            out += ',';
            out += ce.passed ? "true" : "false";
            out += ',';
            out += ce.lhs.str();
            out += ',';
            out += ce.rhs.str();
            out += '\n';
        }
    }
    return out;
}

}  // namespace dedekind
