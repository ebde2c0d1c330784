#pragma once

#include <random>

#include "boxcount/algebra/ratfun.hpp"
#include "boxcount/algebra/series.hpp"

namespace testing_support {

using namespace boxcount;

inline ExponentVector ex(std::initializer_list<int> integers) {
  return ExponentVector::from_integers(integers);
}

inline LaurentPolynomial mono(std::initializer_list<int> integers, const Rational& c = 1) {
  return LaurentPolynomial::monomial(ex(integers), c);
}

inline LaurentPolynomial one3() { return LaurentPolynomial::constant(1, 3); }

// Random Laurent polynomial in three variables with small exponents.
inline LaurentPolynomial random_poly(std::mt19937& rng, int terms, int span = 2) {
  std::uniform_int_distribution<int> e(-span, span), c(-3, 3);
  std::vector<LaurentPolynomial::Term> out;
  for (int i = 0; i < terms; ++i)
    out.push_back({ex({e(rng), e(rng), e(rng)}), Rational(c(rng))});
  return LaurentPolynomial::from_terms(3, std::move(out));
}

// Random nonzero canonical-or-not monomial for a denominator.
inline ExponentVector random_nonzero(std::mt19937& rng, int span = 2) {
  std::uniform_int_distribution<int> e(-span, span);
  for (;;) {
    ExponentVector m = ex({e(rng), e(rng), e(rng)});
    if (!m.is_zero()) return m;
  }
}

inline EvaluationPoint random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(2, 40), den(1, 13);
  EvaluationPoint p;
  for (int i = 0; i < 3; ++i) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    p.sqrt_values.push_back(v);
  }
  return p;
}

}  // namespace testing_support
