#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "boxcount/algebra/factored.hpp"
#include "boxcount/algebra/ratfun.hpp"
#include "boxcount/algebra/series.hpp"

namespace boxcount {

// Variable names t1..tn unless overridden.
std::vector<std::string> default_names(std::size_t arity);

// Terms in ascending graded-lex order, e.g. "1 + t1^-1 + 2*t1^(1/2)*t2".
std::string render(const LaurentPolynomial& p, const std::vector<std::string>& names = {});
std::string render(const RationalFunction& r, const std::vector<std::string>& names = {});
std::string render(const FactoredRational& r, const std::vector<std::string>& names = {});
std::string render(const Rational& c);

// "1 + z + 3z^2 + 6z^3"; non-constant coefficients are parenthesized.
std::string render(const BoxSeries& s, const std::vector<std::string>& names = {},
                   const std::string& variable = "z");
std::string render(const ScalarSeries& s, const std::string& variable = "z");

// {"terms": [{"exp": [..], "num": "..", "den": ".."}]}; exponents are
// JSON numbers and may be half-integers.
nlohmann::json to_json(const LaurentPolynomial& p);
// {"numerator": {...}, "denominator": [{"exp": [..], "power": k}]}; each
// denominator entry is the binomial (1 - t^exp).
nlohmann::json to_json(const RationalFunction& r);
// {"order": N, "coefficients": {"<n>": ratfun}}
nlohmann::json to_json(const BoxSeries& s);

LaurentPolynomial laurent_from_json(const nlohmann::json& j, std::size_t arity);
RationalFunction ratfun_from_json(const nlohmann::json& j, std::size_t arity);

}  // namespace boxcount
