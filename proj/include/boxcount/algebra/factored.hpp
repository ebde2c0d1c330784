#pragma once

#include <map>
#include <vector>

#include "boxcount/algebra/laurent.hpp"
#include "boxcount/algebra/series.hpp"

namespace boxcount {

// numerator / prod f^k for ordinary polynomials f (in practice linear
// forms in s1, s2, s3). Factors are normalized to primitive integer
// content with positive leading coefficient, so equal factors share a
// key; the numerator absorbs the scalar.
class FactoredRational {
 public:
  using Denominator = std::map<LaurentPolynomial, int>;

  FactoredRational() = default;
  FactoredRational(const LaurentPolynomial& p);  // NOLINT: implicit embedding
  static FactoredRational constant(const Rational& c, std::size_t arity = 0);
  // 1 / f^k.
  static FactoredRational inverse_power(const LaurentPolynomial& f, int k);

  std::size_t arity() const noexcept { return arity_; }
  const LaurentPolynomial& numerator() const noexcept { return num_; }
  const Denominator& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.empty(); }

  FactoredRational operator-() const;
  FactoredRational& operator+=(const FactoredRational& other);
  FactoredRational& operator-=(const FactoredRational& other);
  FactoredRational& operator*=(const FactoredRational& other);
  FactoredRational& operator*=(const Rational& c);
  friend FactoredRational operator+(FactoredRational a, const FactoredRational& b) { return a += b; }
  friend FactoredRational operator-(FactoredRational a, const FactoredRational& b) { return a -= b; }
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  friend FactoredRational operator*(FactoredRational a, const Rational& c) { return a *= c; }

  // Only for a constant numerator times factors; used for series leading terms.
  FactoredRational inverse() const;

  // Cancels denominator factors dividing the numerator.
  FactoredRational reduced() const;

  // Replaces variable i by the polynomial images[i]. A factor mapping to
  // zero is a DegeneracyError.
  FactoredRational substitute(const std::vector<LaurentPolynomial>& images) const;

  friend bool operator==(const FactoredRational& a, const FactoredRational& b);

 private:
  void adopt_arity(std::size_t other);
  void add_factor(const LaurentPolynomial& f, int k);

  std::size_t arity_ = 0;
  LaurentPolynomial num_;
  Denominator den_;
};

template <>
struct SeriesTraits<FactoredRational> {
  static FactoredRational zero() { return FactoredRational(); }
  static FactoredRational one() { return FactoredRational::constant(1); }
  static bool is_zero(const FactoredRational& r) { return r.is_zero(); }
  static FactoredRational inverse(const FactoredRational& r) { return r.inverse(); }
  static FactoredRational adams(const FactoredRational&, int) {
    throw std::logic_error("Adams operation is not defined on cohomological weights");
  }
  static bool equal(const FactoredRational& a, const FactoredRational& b) { return a == b; }
};

using CohomologicalSeries = TruncatedSeries<FactoredRational>;

// Primitive integer content, positive leading coefficient; returns the
// scalar c with f = c * normalized.
std::pair<LaurentPolynomial, Rational> normalize_factor(const LaurentPolynomial& f);

// Polynomial substitution of variables (non-negative exponents only).
LaurentPolynomial substitute_polynomial(const LaurentPolynomial& p,
                                        const std::vector<LaurentPolynomial>& images);

}  // namespace boxcount
