#include "boxcount/algebra/substitution.hpp"

#include <stdexcept>

#include "boxcount/errors.hpp"

namespace boxcount {

Substitution::Substitution(std::size_t source_arity, std::size_t target_arity)
    : images_(source_arity, Keep{}), target_arity_(target_arity) {}

Substitution& Substitution::set_monomial(std::size_t variable, const ExponentVector& image) {
  if (variable >= images_.size()) throw ArityError("substitution variable out of range");
  require_same_arity(image.arity(), target_arity_, "substitution image");
  images_[variable] = image;
  return *this;
}

Substitution& Substitution::set_value(std::size_t variable, const Rational& value) {
  if (variable >= images_.size()) throw ArityError("substitution variable out of range");
  images_[variable] = value;
  return *this;
}

bool Substitution::is_monomial() const noexcept {
  for (const auto& im : images_)
    if (std::holds_alternative<Rational>(im)) return false;
  return true;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  mpz_class n = x.get_num(), d = x.get_den();
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& x, long k) {
  if (k == 0) return 1;
  if (x == 0) {
    if (k < 0) throw DegeneracyError("zero raised to a negative power", "0");
    return 0;
  }
  Rational base = k > 0 ? x : Rational(1 / x);
  unsigned long e = static_cast<unsigned long>(k > 0 ? k : -k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::pair<ExponentVector, Rational> Substitution::apply(const ExponentVector& e) const {
  const ExponentVector src = e.arity() == images_.size() ? e : e.embedded(images_.size());
  ExponentVector out(target_arity_);
  Rational factor = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const int d = src.doubled(i);
    if (d == 0) continue;
    const auto& im = images_[i];
    if (std::holds_alternative<Keep>(im)) {
      if (i >= target_arity_) throw ArityError("kept variable has no slot in the target lattice");
      out.set_doubled(i, out.doubled(i) + d);
    } else if (const auto* mono = std::get_if<ExponentVector>(&im)) {
      for (std::size_t j = 0; j < target_arity_; ++j) {
        const long prod = static_cast<long>(d) * mono->doubled(j);
        if (prod % 2 != 0)
          throw std::domain_error("monomial substitution leaves the half-integer lattice");
        out.set_doubled(j, out.doubled(j) + static_cast<int>(prod / 2));
      }
    } else {
      const Rational& value = std::get<Rational>(im);
      if (d % 2 == 0) {
        factor *= rational_pow(value, d / 2);
      } else {
        auto root = rational_sqrt(value);
        if (!root) throw std::domain_error("half-integer exponent needs a rational square root");
        factor *= rational_pow(*root, d);
      }
    }
  }
  return {out, factor};
}

LaurentPolynomial Substitution::apply(const LaurentPolynomial& p) const {
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    auto [e, f] = apply(t.exponent);
    terms.push_back({e, t.coefficient * f});
  }
  return LaurentPolynomial::from_terms(target_arity_, std::move(terms));
}

Substitution Substitution::after(const Substitution& first) const {
  if (!first.is_monomial()) throw std::invalid_argument("composition needs a monomial first map");
  require_same_arity(first.target_arity(), source_arity(), "substitution composition");
  Substitution composed(first.source_arity(), target_arity_);
  for (std::size_t i = 0; i < first.source_arity(); ++i) {
    ExponentVector image(first.target_arity());
    if (const auto* mono = std::get_if<ExponentVector>(&first.image(i))) {
      image = *mono;
    } else {
      if (i >= first.target_arity()) throw ArityError("kept variable has no slot");
      image = ExponentVector::unit(first.target_arity(), i);
    }
    auto [e, f] = apply(image);
    if (f != 1) throw std::invalid_argument("composition with numeric values is not supported");
    composed.set_monomial(i, e);
  }
  return composed;
}

Substitution calabi_yau_slice() {
  Substitution s = Substitution::identity(3);
  s.set_monomial(2, ExponentVector::from_integers({-1, -1, 0}));
  return s;
}

Rational EvaluationPoint::monomial(const ExponentVector& e) const {
  Rational r = 1;
  for (std::size_t i = 0; i < e.arity(); ++i) {
    const int d = e.doubled(i);
    if (d == 0) continue;
    if (i >= sqrt_values.size()) throw ArityError("evaluation point has too few coordinates");
    r *= rational_pow(sqrt_values[i], d);
  }
  return r;
}

EvaluationPoint EvaluationPoint::power(int k) const {
  EvaluationPoint p;
  p.sqrt_values.reserve(sqrt_values.size());
  for (const auto& v : sqrt_values) p.sqrt_values.push_back(rational_pow(v, k));
  return p;
}

Rational evaluate(const LaurentPolynomial& p, const EvaluationPoint& point) {
  Rational s = 0;
  for (const auto& t : p.terms()) s += t.coefficient * point.monomial(t.exponent);
  return s;
}

}  // namespace boxcount
