#include "pel/serialize.hpp"

#include "pel/errors.hpp"

#include <sstream>

namespace pel {

using nlohmann::json;

json serialize_locpoly(const LocPoly& v) {
  json terms = json::array();
  for (const auto& t : v.num().terms()) {
    const auto e = t.first.exponents();
    terms.push_back({{"e", json(std::vector<unsigned>(e.begin(), e.end()))},
                     {"c", to_string(t.second)}});
  }
  return {{"num", std::move(terms)}, {"dA", v.dA()}, {"dL", v.dL()}};
}

namespace {

unsigned parse_exponent(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where, "expected a nonnegative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > Monomial::kMaxExponent) throw ParseError(where, "exponent out of range");
  return static_cast<unsigned>(v);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, std::string("missing key \"") + key + "\"");
  return *it;
}

}  // namespace

LocPoly parse_locpoly(const json& doc, const std::string& location) {
  if (!doc.is_object()) throw ParseError(location, "expected an object");
  const json& num = field(doc, "num", location);
  const std::string num_loc = location + "/num";
  if (!num.is_array()) throw ParseError(num_loc, "expected an array");
  std::vector<MPoly::Term> terms;
  for (std::size_t i = 0; i < num.size(); ++i) {
    const std::string where = num_loc + "/" + std::to_string(i);
    const json& t = num[i];
    if (!t.is_object()) throw ParseError(where, "expected an object");
    const json& e = field(t, "e", where);
    if (!e.is_array() || e.size() != kNumVars) {
      throw ParseError(where + "/e", "expected an array of " + std::to_string(kNumVars) + " exponents");
    }
    std::array<unsigned, kNumVars> exps{};
    for (std::size_t v = 0; v < kNumVars; ++v) {
      exps[v] = parse_exponent(e[v], where + "/e/" + std::to_string(v));
    }
    const json& c = field(t, "c", where);
    if (!c.is_string()) throw ParseError(where + "/c", "expected a rational string");
    BigRational coeff;
    try {
      coeff = parse_rational(c.get<std::string>());
    } catch (const std::invalid_argument& ex) {
      throw ParseError(where + "/c", ex.what());
    }
    if (coeff == 0) throw ParseError(where + "/c", "zero coefficient");
    terms.push_back({Monomial::from_exponents(exps), std::move(coeff)});
  }
  const unsigned dA = parse_exponent(field(doc, "dA", location), location + "/dA");
  const unsigned dL = parse_exponent(field(doc, "dL", location), location + "/dL");
  return LocPoly::make(MPoly::from_terms(std::move(terms)), dA, dL);
}

namespace {

const char* latex_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::lambda: return "\\lambda";
    case Var::La: return "\\ln a";
    case Var::Lb: return "\\ln b";
    case Var::Lc: return "\\ln c";
  }
  return "?";
}

std::string latex_rational(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_poly(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    BigRational c = t.second;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool spaced = false;
    if (c != 1 || t.first.is_one()) {
      os << latex_rational(c);
      spaced = true;
    }
    for (Var v : kAllVars) {
      const unsigned e = t.first.exponent(v);
      if (e == 0) continue;
      if (spaced) os << ' ';
      spaced = true;
      os << latex_name(v);
      if (e > 1) os << "^{" << e << '}';
    }
  }
  return os.str();
}

}  // namespace

std::string to_latex(const LocPoly& v) {
  const std::string num = latex_poly(v.num());
  if (v.is_polynomial()) return num;
  std::string den;
  if (v.dA() > 0) {
    den += "(\\ln a + \\ln b)";
    if (v.dA() > 1) den += "^{" + std::to_string(v.dA()) + "}";
  }
  if (v.dL() > 0) {
    den += "(1 - \\lambda)";
    if (v.dL() > 1) den += "^{" + std::to_string(v.dL()) + "}";
  }
  return "\\frac{" + num + "}{" + den + "}";
}

}  // namespace pel
