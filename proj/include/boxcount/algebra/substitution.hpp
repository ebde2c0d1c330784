#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "boxcount/algebra/laurent.hpp"

namespace boxcount {

// A substitution of the variables of a lattice of arity `source_arity`.
// Each variable is left alone, sent to a monomial of the target lattice,
// or sent to a rational number. Monomial images act on the square-root
// lattice: the variable t maps to M means t^(1/2) maps to M^(1/2), so a
// half-integral image is only allowed against integral exponents.
class Substitution {
 public:
  struct Keep {};
  using Image = std::variant<Keep, ExponentVector, Rational>;

  Substitution(std::size_t source_arity, std::size_t target_arity);
  static Substitution identity(std::size_t arity) { return Substitution(arity, arity); }

  Substitution& set_monomial(std::size_t variable, const ExponentVector& image);
  Substitution& set_value(std::size_t variable, const Rational& value);

  std::size_t source_arity() const noexcept { return images_.size(); }
  std::size_t target_arity() const noexcept { return target_arity_; }
  bool is_monomial() const noexcept;  // no numeric images
  const Image& image(std::size_t variable) const { return images_[variable]; }

  // Monomial part of the image of an exponent, plus the numeric factor.
  // Throws std::domain_error when the result would leave the lattice or
  // needs an irrational square root.
  std::pair<ExponentVector, Rational> apply(const ExponentVector& e) const;

  LaurentPolynomial apply(const LaurentPolynomial& p) const;

  // this after first: x -> this(first(x)). `first` must be monomial.
  Substitution after(const Substitution& first) const;

 private:
  std::vector<Image> images_;
  std::size_t target_arity_;
};

// Exact rational square root, if one exists.
std::optional<Rational> rational_sqrt(const Rational& x);

// Integer power of a rational (negative powers allowed for nonzero x).
Rational rational_pow(const Rational& x, long k);

// The Calabi-Yau slice t3 -> (t1 t2)^-1 on the three-variable DT torus.
Substitution calabi_yau_slice();

// Values of the square-root variables q_i = t_i^(1/2) at which every
// monomial on the half-integer lattice evaluates to a rational number.
struct EvaluationPoint {
  std::vector<Rational> sqrt_values;
  Rational monomial(const ExponentVector& e) const;
  // Point with every square-root coordinate raised to the k-th power.
  EvaluationPoint power(int k) const;
};

Rational evaluate(const LaurentPolynomial& p, const EvaluationPoint& point);

}  // namespace boxcount
