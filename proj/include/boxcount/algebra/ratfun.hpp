#pragma once

#include <map>
#include <span>
#include <vector>

#include "boxcount/algebra/laurent.hpp"
#include "boxcount/algebra/substitution.hpp"

namespace boxcount {

// numerator / prod (1 - m)^k.
//
// Every denominator monomial m is nonzero and canonical (first nonzero
// doubled entry positive); a non-canonical factor is absorbed through
// 1/(1 - m) = -m^-1 / (1 - m^-1). Reduction is optional: two values are
// equal iff they agree after cross-multiplication.
class RationalFunction {
 public:
  using Denominator = std::map<ExponentVector, int>;

  RationalFunction() = default;
  RationalFunction(const LaurentPolynomial& p);  // NOLINT: polynomials embed implicitly
  static RationalFunction constant(const Rational& c, std::size_t arity = 0);
  static RationalFunction monomial(const ExponentVector& e, const Rational& c = 1);
  // numerator / prod (1 - m)^k for arbitrary nonzero m and k >= 0.
  static RationalFunction from_parts(LaurentPolynomial numerator,
                                     std::span<const std::pair<ExponentVector, int>> factors);
  // 1 / (1 - m).
  static RationalFunction geometric(const ExponentVector& m);

  std::size_t arity() const noexcept { return arity_; }
  const LaurentPolynomial& numerator() const noexcept { return num_; }
  const Denominator& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.empty(); }
  // Expanded product of the denominator factors.
  LaurentPolynomial denominator_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator*=(const Rational& c);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }
  friend RationalFunction operator*(const Rational& c, RationalFunction a) { return a *= c; }

  RationalFunction times_monomial(const ExponentVector& e, const Rational& c = 1) const;
  // Multiplies by (1 - m)^k for any integer k (negative k divides).
  RationalFunction times_binomial_power(const ExponentVector& m, int k) const;
  // Only for a single-term numerator.
  RationalFunction inverse() const;
  // Negative powers need a single-term numerator.
  RationalFunction pow(int k) const;

  // Exponent negation on numerator and denominator.
  RationalFunction dual() const;
  RationalFunction adams(int k) const;
  RationalFunction embedded(std::size_t new_arity) const;

  // Cancels denominator factors that divide the numerator exactly.
  RationalFunction reduced() const;

  // Monomial images may send a factor to a new binomial; numeric images
  // must send every denominator factor to a nonzero constant.
  RationalFunction specialize(const Substitution& s) const;
  // Throws DegeneracyError at a denominator zero.
  Rational evaluate(const EvaluationPoint& point) const;

  // One common denominator for the whole sum.
  static RationalFunction sum(std::span<const RationalFunction> terms);

  friend bool ratfun_equal(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return ratfun_equal(a, b);
  }

 private:
  void adopt_arity(std::size_t other);
  void add_factor(const ExponentVector& m, int k);

  std::size_t arity_ = 0;
  LaurentPolynomial num_;
  Denominator den_;
};

bool ratfun_equal(const RationalFunction& a, const RationalFunction& b);

}  // namespace boxcount
