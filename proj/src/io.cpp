#include "dormant/io.hpp"

#include <algorithm>
#include <charconv>

#include "dormant/errors.hpp"

namespace dormant {

namespace {

int64_t parse_int(const std::string& token) {
  int64_t v = 0;
  const char* b = token.data();
  const char* e = token.data() + token.size();
  while (b < e && *b == ' ') ++b;
  while (e > b && e[-1] == ' ') --e;
  const auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || b == e)
    throw PreconditionViolated("not an integer: '" + token + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Json ntable_to_json(const NTable& table, const std::string& source) {
  Json doc;
  doc["p"] = table.modulus();
  doc["labels"] = table.labels();
  Json entries = Json::array();
  for (const auto& [k, n] : table.entries())
    entries.push_back(Json{{"triple", {k[0], k[1], k[2]}}, {"count", n}});
  doc["N"] = std::move(entries);
  doc["meta"] = Json{{"source", source}, {"tool_version", kToolVersion}};
  return doc;
}

NTable ntable_from_json(const Json& doc) {
  try {
    const auto p = doc.at("p").get<int64_t>();
    require_odd_prime(static_cast<uint64_t>(std::max<int64_t>(p, 0)));
    NTable table(static_cast<uint32_t>(p));
    const auto labels = doc.at("labels").get<std::vector<int>>();
    if (!std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw PreconditionViolated("ntable: labels must be strictly ascending");
    for (int l : labels) table.add_label(l);
    for (const auto& e : doc.at("N")) {
      const auto t = e.at("triple").get<std::vector<int>>();
      const auto n = e.at("count").get<int64_t>();
      if (t.size() != 3 || !std::is_sorted(t.begin(), t.end()))
        throw PreconditionViolated("ntable: triples must be ascending of length 3");
      if (n < 0) throw PreconditionViolated("ntable: negative count");
      for (int l : t)
        if (!std::binary_search(labels.begin(), labels.end(), l))
          throw PreconditionViolated("ntable: triple uses unlisted label " + std::to_string(l));
      if (table.count(t[0], t[1], t[2]) != 0)
        throw PreconditionViolated("ntable: duplicate triple");
      table.set(t[0], t[1], t[2], n);
    }
    return table;
  } catch (const Json::exception& e) {
    throw PreconditionViolated(std::string("ntable: ") + e.what());
  }
}

Json polynomial_to_json(const Polynomial& f) { return f.to_coefficients(); }

Polynomial polynomial_from_json(uint32_t p, const Json& coeffs) {
  return Polynomial(p, coeffs.get<std::vector<int64_t>>());
}

Json rational_to_json(const RationalFunction& r) {
  return Json{{"num", polynomial_to_json(r.numerator())},
              {"den", polynomial_to_json(r.denominator())}};
}

Json profile_to_json(const SheafProfile& profile) {
  return Json{{"rank", profile.rank},
              {"degree", profile.degree},
              {"splitting", profile.splitting},
              {"section_counts", profile.section_counts}};
}

Json closed_form_to_json(const ClosedFormResult& r) {
  return Json{{"value", r.value}, {"residual", r.residual}, {"terms", r.terms}};
}

Polynomial parse_polynomial(uint32_t p, const std::string& text) {
  if (text.find_first_not_of(' ') == std::string::npos) return Polynomial(p);
  std::vector<int64_t> c;
  for (const auto& tok : split(text, ',')) c.push_back(parse_int(tok));
  return Polynomial(p, c);
}

std::vector<Polynomial> parse_potentials(uint32_t p, const std::string& text) {
  std::vector<Polynomial> out;
  if (text.empty()) return out;
  for (const auto& tok : split(text, '/')) out.push_back(parse_polynomial(p, tok));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.find_first_not_of(' ') == std::string::npos) return out;
  for (const auto& tok : split(text, ',')) out.push_back(static_cast<int>(parse_int(tok)));
  return out;
}

}  // namespace dormant
