#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "boxcount/algebra/exponent.hpp"

namespace boxcount {

using Rational = mpq_class;

// Sparse multivariate Laurent polynomial with exact rational coefficients.
//
// Terms are kept sorted by the graded-lexicographic order on exponents
// and no zero coefficient is ever stored, so equality is term-list
// equality. A polynomial of arity 0 is a scalar and combines with any
// arity.
class LaurentPolynomial {
 public:
  struct Term {
    ExponentVector exponent;
    Rational coefficient;
  };

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t arity) : arity_(arity) {}

  static LaurentPolynomial constant(const Rational& c, std::size_t arity = 0);
  static LaurentPolynomial monomial(const ExponentVector& e, const Rational& c = 1);
  // Combines repeated exponents and drops zeros.
  static LaurentPolynomial from_terms(std::size_t arity, std::vector<Term> terms);
  // Internal fast path: terms already strictly sorted with nonzero coefficients.
  static LaurentPolynomial from_sorted_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_constant() const noexcept;
  // Coefficient of the zero exponent.
  Rational constant_term() const;
  Rational coefficient(const ExponentVector& e) const;
  bool is_integral() const noexcept;  // all exponents integral
  bool has_integer_coefficients() const noexcept;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }

  LaurentPolynomial times_monomial(const ExponentVector& e, const Rational& c = 1) const;
  // this * (1 - m); linear time.
  LaurentPolynomial times_binomial(const ExponentVector& m) const;
  LaurentPolynomial pow(unsigned k) const;

  // Negates every exponent (the duality on characters).
  LaurentPolynomial dual() const;
  // Multiplies every exponent by k (the Adams operation psi_k).
  LaurentPolynomial adams(int k) const;
  LaurentPolynomial embedded(std::size_t new_arity) const;

  // Sum of all coefficients.
  Rational sum_of_coefficients() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);
  // Total order on polynomials (used for keys only).
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  void adopt_arity(std::size_t other);

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

// Exact division by the binomial (1 - m). Returns nothing when (1 - m)
// does not divide p; p is never modified.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& p, const ExponentVector& m);

// Exact division by an arbitrary polynomial with non-negative exponents
// (ordinary polynomials only), using the division algorithm.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& p,
                                              const LaurentPolynomial& divisor);

// Product of binomials (1 - m) with multiplicities, expanded.
LaurentPolynomial binomial_product(std::size_t arity,
                                   std::span<const std::pair<ExponentVector, int>> factors);

}  // namespace boxcount
