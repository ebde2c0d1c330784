#include "boxcount/algebra/render.hpp"

#include <sstream>
#include <tuple>

#include "boxcount/errors.hpp"

namespace boxcount {

namespace {

std::string name_of(const std::vector<std::string>& names, std::size_t i) {
  if (i < names.size()) return names[i];
  return "t" + std::to_string(i + 1);
}

std::string render_monomial(const ExponentVector& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.arity(); ++i) {
    const int d = e.doubled(i);
    if (d == 0) continue;
    if (!out.empty()) out += "*";
    out += name_of(names, i);
    if (d == 2) continue;
    if (d % 2 == 0) {
      out += "^" + std::to_string(d / 2);
    } else {
      out += "^(" + std::to_string(d) + "/2)";
    }
  }
  return out;
}

// Sign is returned separately so callers can join with " + " / " - ".
std::string unsigned_term(const Rational& c, const std::string& body) {
  const Rational a = abs(c);
  if (body.empty()) return a.get_str();
  if (a == 1) return body;
  return a.get_str() + "*" + body;
}

void append_signed(std::string& out, bool negative, const std::string& text) {
  if (out.empty()) {
    out = negative ? "-" + text : text;
  } else {
    out += negative ? " - " : " + ";
    out += text;
  }
}

nlohmann::json exponent_json(const ExponentVector& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < e.arity(); ++i) {
    const int d = e.doubled(i);
    if (d % 2 == 0) {
      arr.push_back(d / 2);
    } else {
      arr.push_back(d / 2.0);
    }
  }
  return arr;
}

ExponentVector exponent_from_json(const nlohmann::json& j, std::size_t arity) {
  if (!j.is_array() || j.size() != arity) throw ParseError("exponent array has the wrong length");
  std::vector<int> doubled;
  for (const auto& x : j) {
    if (!x.is_number()) throw ParseError("exponent entry is not a number");
    const double v = x.get<double>() * 2.0;
    const int d = static_cast<int>(v);
    if (static_cast<double>(d) != v) throw ParseError("exponent is not a half-integer");
    doubled.push_back(d);
  }
  return ExponentVector::from_doubled(doubled);
}

}  // namespace

std::vector<std::string> default_names(std::size_t arity) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arity; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

std::string render(const Rational& c) { return c.get_str(); }

std::string render(const LaurentPolynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms())
    append_signed(out, t.coefficient < 0, unsigned_term(t.coefficient, render_monomial(t.exponent, names)));
  return out;
}

std::string render(const RationalFunction& r, const std::vector<std::string>& names) {
  const std::string num = render(r.numerator(), names);
  if (r.is_polynomial()) return num;
  std::string den;
  for (const auto& [m, k] : r.denominator()) {
    if (!den.empty()) den += "*";
    den += "(1 - " + render_monomial(m, names) + ")";
    if (k != 1) den += "^" + std::to_string(k);
  }
  return "(" + num + ")/(" + den + ")";
}

std::string render(const FactoredRational& r, const std::vector<std::string>& names) {
  const std::string num = render(r.numerator(), names);
  if (r.is_polynomial()) return num;
  std::string den;
  for (const auto& [f, k] : r.denominator()) {
    if (!den.empty()) den += "*";
    den += "(" + render(f, names) + ")";
    if (k != 1) den += "^" + std::to_string(k);
  }
  return "(" + num + ")/(" + den + ")";
}

namespace {

std::string power_suffix(const std::string& variable, int n) {
  if (n == 0) return "";
  if (n == 1) return variable;
  return variable + "^" + std::to_string(n);
}

template <class Series, class Coefficient>
std::string render_series(const Series& s, const std::string& variable, Coefficient&& coefficient) {
  std::string out;
  for (int n = s.valuation(); n <= s.order(); ++n) {
    auto [negative, text, scalar] = coefficient(s.coefficient(n));
    if (text == "0") continue;
    const std::string zpart = power_suffix(variable, n);
    std::string term;
    if (zpart.empty()) {
      term = text;
    } else if (scalar) {
      term = text == "1" ? zpart : text + zpart;
    } else {
      term = "(" + text + ")*" + zpart;
    }
    append_signed(out, negative, term);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render(const BoxSeries& s, const std::vector<std::string>& names,
                   const std::string& variable) {
  return render_series(s, variable, [&](const RationalFunction& c) {
    if (c.is_zero()) return std::tuple<bool, std::string, bool>{false, "0", true};
    if (c.is_polynomial() && c.numerator().is_constant()) {
      const Rational v = c.numerator().constant_term();
      return std::tuple<bool, std::string, bool>{v < 0, Rational(abs(v)).get_str(), true};
    }
    return std::tuple<bool, std::string, bool>{false, render(c, names), false};
  });
}

std::string render(const ScalarSeries& s, const std::string& variable) {
  return render_series(s, variable, [](const Rational& c) {
    if (c == 0) return std::tuple<bool, std::string, bool>{false, "0", true};
    return std::tuple<bool, std::string, bool>{c < 0, Rational(abs(c)).get_str(), true};
  });
}

nlohmann::json to_json(const LaurentPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"exp", exponent_json(t.exponent)},
                     {"num", t.coefficient.get_num().get_str()},
                     {"den", t.coefficient.get_den().get_str()}});
  }
  return {{"terms", terms}};
}

nlohmann::json to_json(const RationalFunction& r) {
  nlohmann::json den = nlohmann::json::array();
  for (const auto& [m, k] : r.denominator()) den.push_back({{"exp", exponent_json(m)}, {"power", k}});
  return {{"numerator", to_json(r.numerator())}, {"denominator", den}};
}

nlohmann::json to_json(const BoxSeries& s) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (int n = s.valuation(); n <= s.order(); ++n) {
    const RationalFunction c = s.coefficient(n);
    if (!c.is_zero()) coeffs[std::to_string(n)] = to_json(c);
  }
  return {{"order", s.order()}, {"coefficients", coeffs}};
}

LaurentPolynomial laurent_from_json(const nlohmann::json& j, std::size_t arity) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("polynomial JSON needs a \"terms\" array");
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.contains("exp") || !t.contains("num") || !t.contains("den"))
      throw ParseError("term needs exp, num and den");
    Rational c(mpz_class(t["num"].get<std::string>()), mpz_class(t["den"].get<std::string>()));
    c.canonicalize();
    terms.push_back({exponent_from_json(t["exp"], arity), c});
  }
  return LaurentPolynomial::from_terms(arity, std::move(terms));
}

RationalFunction ratfun_from_json(const nlohmann::json& j, std::size_t arity) {
  if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator"))
    throw ParseError("rational function JSON needs numerator and denominator");
  std::vector<std::pair<ExponentVector, int>> factors;
  for (const auto& f : j["denominator"])
    factors.emplace_back(exponent_from_json(f.at("exp"), arity), f.at("power").get<int>());
  return RationalFunction::from_parts(laurent_from_json(j["numerator"], arity), factors);
}

}  // namespace boxcount
