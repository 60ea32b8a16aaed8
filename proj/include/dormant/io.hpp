#pragma once

#include <string>

#include "dormant/closed_form.hpp"
#include "dormant/enumeration.hpp"
#include "dormant/oper.hpp"
#include "json.hpp"

namespace dormant {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

// {"p", "labels", "N": [{"triple", "count"}], "meta": {"source", "tool_version"}}
Json ntable_to_json(const NTable& table, const std::string& source);
// Throws PreconditionViolated on malformed documents (unsorted triples,
// negative counts, labels that do not cover the triples, bad prime).
NTable ntable_from_json(const Json& doc);

Json polynomial_to_json(const Polynomial& f);  // ascending coefficients
Polynomial polynomial_from_json(uint32_t p, const Json& coeffs);
Json rational_to_json(const RationalFunction& r);
Json profile_to_json(const SheafProfile& profile);
Json closed_form_to_json(const ClosedFormResult& r);

// Parses "c0,c1,..." (ascending powers). Empty string is the zero polynomial.
Polynomial parse_polynomial(uint32_t p, const std::string& text);
// Parses "f2/f3/..." into potentials.
std::vector<Polynomial> parse_potentials(uint32_t p, const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace dormant
