#include "gitstate/json_io.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

#include "gitstate/poly_parse.hpp"

namespace gitstate {

using nlohmann::json;

std::string fnv1a64_hex(const std::string& bytes) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw UsageError(std::string("expected integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

const json& require_array(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw UsageError(std::string("expected array field \"") + key + "\"");
  return j.at(key);
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw UsageError(std::string("expected string field \"") + key + "\"");
  return j.at(key).get<std::string>();
}

Character character_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("character must be an array of integers");
  Character chi;
  chi.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw UsageError("character entries must be integers");
    chi.push_back(e.get<long long>());
  }
  return chi;
}

Monomial monomial_from_exponents(const json& j, int r) {
  if (!j.is_array() || static_cast<int>(j.size()) != r)
    throw UsageError("wedge factor must list one exponent per variable");
  Monomial m;
  for (int i = 0; i < r; ++i) {
    const auto& e = j.at(static_cast<size_t>(i));
    if (!e.is_number_integer() || e.get<long long>() < 0)
      throw UsageError("exponents must be nonnegative integers");
    int exp = e.get<int>();
    if (exp > 0) m = m * Monomial::var(VarRef::x(i + 1), exp);
  }
  return m;
}

}  // namespace

json exterior_to_json(const ExteriorVector& v) {
  json coords = json::array();
  for (const auto& [w, c] : v.coords()) {
    json wedge = json::array();
    for (const auto& f : w.factors()) {
      json expv = json::array();
      for (int i = 1; i <= v.r(); ++i) expv.push_back(f.exponent(VarRef::x(i)));
      wedge.push_back(std::move(expv));
    }
    coords.push_back(json{{"coeff", c.str()}, {"wedge", std::move(wedge)}});
  }
  return json{{"r", v.r()}, {"d", v.d()}, {"b", v.b()}, {"coords", std::move(coords)}};
}

ExteriorVector exterior_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("expected a JSON object");
  int r = require_int(j, "r");
  int d = require_int(j, "d");
  int b = require_int(j, "b");
  ExteriorVector v(r, d, b);
  for (const auto& entry : require_array(j, "coords")) {
    if (!entry.is_object()) throw UsageError("coordinate entries must be objects");
    const json& wedge = require_array(entry, "wedge");
    std::vector<Monomial> factors;
    factors.reserve(wedge.size());
    for (const auto& f : wedge) factors.push_back(monomial_from_exponents(f, r));
    Polynomial coeff = parse_polynomial(require_string(entry, "coeff"));
    v.add_term(WedgeIndex(std::move(factors)), coeff);
  }
  return v;
}

json sc_to_json(const SCInstance& inst) {
  json j = exterior_to_json(inst.point);
  j["character"] = inst.character;
  return j;
}

SCInstance sc_from_json(const json& j) {
  ExteriorVector v = exterior_from_json(j);
  if (!j.contains("character")) throw UsageError("instance needs a \"character\" field");
  return SCInstance(std::move(v), character_from_json(j.at("character")));
}

json esc_to_json(const ESCInstance& inst) {
  json j = exterior_to_json(inst.point);
  json chars = json::array();
  for (const auto& chi : inst.characters) chars.push_back(chi);
  j["characters"] = std::move(chars);
  return j;
}

ESCInstance esc_from_json(const json& j) {
  ExteriorVector v = exterior_from_json(j);
  if (!j.contains("characters")) throw UsageError("instance needs a \"characters\" field");
  const json& arr = j.at("characters");
  if (!arr.is_array()) throw UsageError("\"characters\" must be an array");
  std::vector<Character> chis;
  chis.reserve(arr.size());
  for (const auto& e : arr) chis.push_back(character_from_json(e));
  return ESCInstance(std::move(v), std::move(chis));
}

json system_to_json(const PolySystem& p) {
  json polys = json::array();
  for (const auto& q : p.polys) polys.push_back(q.str());
  return json{{"r", p.r}, {"polys", std::move(polys)}};
}

PolySystem system_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("expected a JSON object");
  int r = require_int(j, "r");
  std::vector<Polynomial> polys;
  for (const auto& e : require_array(j, "polys")) {
    if (!e.is_string()) throw UsageError("system polynomials must be strings");
    polys.push_back(parse_polynomial(e.get<std::string>()));
  }
  return PolySystem(r, std::move(polys));
}

json verdict_to_json(const Verdict& v) {
  if (v.semistable)
    return json{{"semistable", true}, {"certificate", {{"checked_pairs", v.checked_pairs}}}};
  const Certificate& c = *v.certificate;
  json omega = json::array();
  for (const auto& q : c.omega) omega.push_back(rational_str(q));
  json basis = json::array();
  for (const auto& p : c.basis.polys) basis.push_back(p.str());
  return json{{"semistable", false},
              {"certificate",
               {{"q", c.q}, {"omega", std::move(omega)}, {"groebner", std::move(basis)}}}};
}

std::vector<Polynomial> parse_ideal_lines(const std::string& text) {
  std::vector<Polynomial> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    try {
      out.push_back(parse_polynomial(line));
    } catch (const UsageError& e) {
      throw UsageError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError("no polynomials found");
  return out;
}

}  // namespace gitstate
