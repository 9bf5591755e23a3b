#include "compsum/json_io.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

namespace compsum {

namespace {

using json = nlohmann::ordered_json;

json parse(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument(std::string(what) + ": malformed JSON");
  }
  return j;
}

// Rational::parse distinguishes bad syntax from a zero denominator; as JSON
// payload both are just malformed input.
Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

json bipoly_to_value(const BiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"u", m.u}, {"v", m.v}, {"c", c.str()}});
  }
  return {{"terms", std::move(terms)}};
}

BiPoly bipoly_from_value(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("BiPoly JSON: expected {\"terms\":[...]}");
  }
  BiPoly p;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("u") || !t.contains("v") ||
        !t.contains("c") || !t["u"].is_number_integer() ||
        !t["v"].is_number_integer() || !t["c"].is_string()) {
      throw std::invalid_argument(
          "BiPoly JSON: each term needs integer u, v and string c");
    }
    const int u = t["u"].get<int>();
    const int v = t["v"].get<int>();
    if (u < 0 || v < 0) {
      throw std::invalid_argument("BiPoly JSON: negative exponent");
    }
    p.add_term({u, v}, parse_rational(t["c"].get<std::string>(), "BiPoly JSON"));
  }
  return p;
}

}  // namespace

std::string bipoly_to_json(const BiPoly& p) { return bipoly_to_value(p).dump(); }

BiPoly bipoly_from_json(std::string_view text) {
  return bipoly_from_value(parse(text, "BiPoly"));
}

std::string series_to_json(const Series& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.str());
  json j{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
  return j.dump();
}

Series series_from_json(std::string_view text) {
  const json j = parse(text, "Series");
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
      !j["order"].is_number_integer() || !j["coeffs"].is_array()) {
    throw std::invalid_argument(
        "Series JSON: expected {\"order\":N,\"coeffs\":[...]}");
  }
  const int order = j["order"].get<int>();
  const auto& arr = j["coeffs"];
  if (order < 0 || arr.size() != static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("Series JSON: coeffs must have order+1 entries");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& c : arr) {
    if (!c.is_string()) {
      throw std::invalid_argument("Series JSON: coefficients must be strings");
    }
    coeffs.push_back(parse_rational(c.get<std::string>(), "Series JSON"));
  }
  return Series(std::move(coeffs));
}

std::string composition_to_json(const Composition& c) {
  return json(c.parts()).dump();
}

Composition composition_from_json(std::string_view text) {
  const json j = parse(text, "Composition");
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("Composition JSON: expected a nonempty array");
  }
  std::vector<int> parts;
  parts.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) {
      throw std::invalid_argument("Composition JSON: parts must be integers");
    }
    parts.push_back(x.get<int>());
  }
  return Composition(std::move(parts));
}

std::string generating_poly_to_json(const GeneratingPolynomial& g) {
  json j{{"n", g.n}, {"poly", bipoly_to_value(g.poly)}};
  return j.dump();
}

GeneratingPolynomial generating_poly_from_json(std::string_view text) {
  const json j = parse(text, "GeneratingPolynomial");
  if (!j.is_object() || !j.contains("n") || !j.contains("poly") ||
      !j["n"].is_number_integer()) {
    throw std::invalid_argument(
        "GeneratingPolynomial JSON: expected {\"n\":N,\"poly\":{...}}");
  }
  const int n = j["n"].get<int>();
  if (n < 1) {
    throw std::invalid_argument("GeneratingPolynomial JSON: n must be >= 1");
  }
  return {n, bipoly_from_value(j["poly"])};
}

std::string identity_report_to_json(const IdentityReport& r) {
  json j{{"identity", std::string(identity_name(r.identity))},
         {"n", r.n},
         {"l", r.l},
         {"lhs", r.lhs.str()},
         {"rhs", r.rhs.str()},
         {"pass", r.pass}};
  return j.dump();
}

}  // namespace compsum
