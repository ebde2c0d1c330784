#include "boxcount/algebra/factored.hpp"

#include <algorithm>
#include <stdexcept>

#include "boxcount/algebra/substitution.hpp"
#include "boxcount/errors.hpp"

namespace boxcount {

namespace {

LaurentPolynomial power_of(const LaurentPolynomial& f, int k, std::size_t arity) {
  LaurentPolynomial p = LaurentPolynomial::constant(1, arity);
  for (int i = 0; i < k; ++i) p = p * f;
  return p;
}

LaurentPolynomial raise_to(LaurentPolynomial p, const FactoredRational::Denominator& have,
                           const FactoredRational::Denominator& target, std::size_t arity) {
  for (const auto& [f, k] : target) {
    auto it = have.find(f);
    const int extra = k - (it == have.end() ? 0 : it->second);
    if (extra > 0) p = p * power_of(f, extra, arity);
  }
  return p;
}

}  // namespace

std::pair<LaurentPolynomial, Rational> normalize_factor(const LaurentPolynomial& f) {
  if (f.is_zero()) throw DegeneracyError("zero denominator factor", "0");
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (f.terms().back().coefficient < 0) content = -content;
  return {f * Rational(1 / content), content};
}

LaurentPolynomial substitute_polynomial(const LaurentPolynomial& p,
                                        const std::vector<LaurentPolynomial>& images) {
  std::size_t arity = 0;
  for (const auto& im : images) arity = std::max(arity, im.arity());
  LaurentPolynomial out(arity);
  for (const auto& t : p.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(t.coefficient, arity);
    for (std::size_t i = 0; i < t.exponent.arity(); ++i) {
      const int d = t.exponent.doubled(i);
      if (d == 0) continue;
      if (d < 0 || d % 2 != 0) throw std::domain_error("polynomial substitution needs integral exponents");
      if (i >= images.size()) throw ArityError("substitution has too few images");
      term = term * images[i].pow(static_cast<unsigned>(d / 2));
    }
    out += term;
  }
  return out;
}

FactoredRational::FactoredRational(const LaurentPolynomial& p) : arity_(p.arity()), num_(p) {}

FactoredRational FactoredRational::constant(const Rational& c, std::size_t arity) {
  return FactoredRational(LaurentPolynomial::constant(c, arity));
}

FactoredRational FactoredRational::inverse_power(const LaurentPolynomial& f, int k) {
  FactoredRational r = constant(1, f.arity());
  r.add_factor(f, k);
  return r;
}

void FactoredRational::adopt_arity(std::size_t other) {
  if (other == 0 || other == arity_) return;
  if (arity_ == 0) {
    arity_ = other;
    num_ = num_.embedded(other);
    Denominator moved;
    for (const auto& [f, k] : den_) moved[f.embedded(other)] = k;
    den_ = std::move(moved);
    return;
  }
  require_same_arity(arity_, other, "factored rational");
}

void FactoredRational::add_factor(const LaurentPolynomial& f, int k) {
  if (k == 0) return;
  adopt_arity(f.arity());
  auto [g, content] = normalize_factor(f);
  num_ *= rational_pow(content, -k);
  if (!g.is_constant()) den_[g] += k;
}

FactoredRational FactoredRational::operator-() const {
  FactoredRational r = *this;
  r.num_ = -r.num_;
  return r;
}

FactoredRational& FactoredRational::operator+=(const FactoredRational& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    const std::size_t a = arity_;
    *this = other;
    adopt_arity(a);
    return *this;
  }
  adopt_arity(other.arity_);
  FactoredRational rhs = other;
  rhs.adopt_arity(arity_);
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (num_.is_zero()) den_.clear();
    return *this;
  }
  Denominator lcm = den_;
  for (const auto& [f, k] : rhs.den_) lcm[f] = std::max(lcm[f], k);
  LaurentPolynomial sum = raise_to(std::move(num_), den_, lcm, arity_);
  sum += raise_to(rhs.num_, rhs.den_, lcm, arity_);
  num_ = std::move(sum);
  den_ = num_.is_zero() ? Denominator{} : std::move(lcm);
  return *this;
}

FactoredRational& FactoredRational::operator-=(const FactoredRational& other) {
  return *this += -other;
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& other) {
  adopt_arity(other.arity_);
  FactoredRational rhs = other;
  rhs.adopt_arity(arity_);
  num_ = num_ * rhs.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& [f, k] : rhs.den_) den_[f] += k;
  return *this;
}

FactoredRational& FactoredRational::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) den_.clear();
  return *this;
}

FactoredRational FactoredRational::inverse() const {
  if (!num_.is_constant() || num_.is_zero())
    throw std::domain_error("inverse needs a nonzero constant numerator");
  FactoredRational r = constant(Rational(1 / num_.constant_term()), arity_);
  LaurentPolynomial n = LaurentPolynomial::constant(1, arity_);
  for (const auto& [f, k] : den_) n = n * power_of(f, k, arity_);
  r.num_ = r.num_ * n;
  return r;
}

FactoredRational FactoredRational::reduced() const {
  FactoredRational r = *this;
  for (auto it = r.den_.begin(); it != r.den_.end();) {
    while (it->second > 0) {
      auto q = divide_exact(r.num_, it->first);
      if (!q) break;
      r.num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? r.den_.erase(it) : std::next(it);
  }
  return r;
}

FactoredRational FactoredRational::substitute(const std::vector<LaurentPolynomial>& images) const {
  FactoredRational r(substitute_polynomial(num_, images));
  for (const auto& [f, k] : den_) {
    LaurentPolynomial g = substitute_polynomial(f, images);
    if (g.is_zero()) throw DegeneracyError("denominator factor vanishes under substitution", "");
    r.add_factor(g, k);
  }
  return r;
}

bool operator==(const FactoredRational& a, const FactoredRational& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  FactoredRational::Denominator only_a, only_b;
  for (const auto& [f, k] : a.den_) {
    auto it = b.den_.find(f);
    const int common = it == b.den_.end() ? 0 : std::min(k, it->second);
    if (k > common) only_a[f] = k - common;
  }
  for (const auto& [f, k] : b.den_) {
    auto it = a.den_.find(f);
    const int common = it == a.den_.end() ? 0 : std::min(k, it->second);
    if (k > common) only_b[f] = k - common;
  }
  const std::size_t arity = std::max(a.arity_, b.arity_);
  return raise_to(a.num_, {}, only_b, arity) == raise_to(b.num_, {}, only_a, arity);
}

}  // namespace boxcount
