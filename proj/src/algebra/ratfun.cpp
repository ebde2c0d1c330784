#include "boxcount/algebra/ratfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <sstream>

#include "boxcount/errors.hpp"

namespace boxcount {

namespace {

std::string describe(const ExponentVector& m) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < m.arity(); ++i) out << (i ? "," : "") << m.doubled(i);
  out << ")/2";
  return out.str();
}

LaurentPolynomial times_binomials(LaurentPolynomial p, const ExponentVector& m, int k) {
  for (int i = 0; i < k; ++i) p = p.times_binomial(m);
  return p;
}

// p * prod over `target` of (1 - m)^(target[m] - have[m]).
LaurentPolynomial raise_to(LaurentPolynomial p, const RationalFunction::Denominator& have,
                           const RationalFunction::Denominator& target) {
  for (const auto& [m, k] : target) {
    auto it = have.find(m);
    const int extra = k - (it == have.end() ? 0 : it->second);
    p = times_binomials(std::move(p), m, extra);
  }
  return p;
}

}  // namespace

RationalFunction::RationalFunction(const LaurentPolynomial& p) : arity_(p.arity()), num_(p) {}

RationalFunction RationalFunction::constant(const Rational& c, std::size_t arity) {
  return RationalFunction(LaurentPolynomial::constant(c, arity));
}

RationalFunction RationalFunction::monomial(const ExponentVector& e, const Rational& c) {
  return RationalFunction(LaurentPolynomial::monomial(e, c));
}

RationalFunction RationalFunction::from_parts(
    LaurentPolynomial numerator, std::span<const std::pair<ExponentVector, int>> factors) {
  RationalFunction r(numerator);
  for (const auto& [m, k] : factors) {
    if (k < 0) throw std::invalid_argument("denominator multiplicity must be non-negative");
    r.adopt_arity(m.arity());
    r.add_factor(m, k);
  }
  return r;
}

RationalFunction RationalFunction::geometric(const ExponentVector& m) {
  const std::pair<ExponentVector, int> f{m, 1};
  return from_parts(LaurentPolynomial::constant(1, m.arity()), std::span(&f, 1));
}

void RationalFunction::adopt_arity(std::size_t other) {
  if (other == 0 || other == arity_) return;
  if (arity_ == 0) {
    arity_ = other;
    num_ = num_.embedded(other);
    if (!den_.empty()) throw InternalConsistencyError("scalar with a denominator");
    return;
  }
  require_same_arity(arity_, other, "rational function");
}

void RationalFunction::add_factor(const ExponentVector& m, int k) {
  if (k == 0) return;
  if (m.is_zero()) throw DegeneracyError("denominator factor (1 - 1)", describe(m));
  if (m.is_positive()) {
    den_[m] += k;
    return;
  }
  // 1/(1 - m) = -m^-1 / (1 - m^-1)
  num_ = num_.times_monomial(m.scaled(-k), k % 2 == 0 ? Rational(1) : Rational(-1));
  den_[-m] += k;
}

LaurentPolynomial RationalFunction::denominator_polynomial() const {
  LaurentPolynomial p = LaurentPolynomial::constant(1, arity_);
  for (const auto& [m, k] : den_) p = times_binomials(std::move(p), m, k);
  return p;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    const std::size_t a = arity_;
    *this = other;
    adopt_arity(a);
    return *this;
  }
  adopt_arity(other.arity_);
  if (den_ == other.den_) {
    num_ += other.num_;
    if (num_.is_zero()) den_.clear();
    return *this;
  }
  Denominator lcm = den_;
  for (const auto& [m, k] : other.den_) lcm[m] = std::max(lcm[m], k);
  LaurentPolynomial mine = raise_to(std::move(num_), den_, lcm);
  mine += raise_to(other.num_, other.den_, lcm);
  num_ = std::move(mine);
  den_ = num_.is_zero() ? Denominator{} : std::move(lcm);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  adopt_arity(other.arity_);
  num_ = num_ * other.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& [m, k] : other.den_) den_[m] += k;
  return *this;
}

RationalFunction& RationalFunction::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) den_.clear();
  return *this;
}

RationalFunction RationalFunction::times_monomial(const ExponentVector& e, const Rational& c) const {
  RationalFunction r = *this;
  r.adopt_arity(e.arity());
  r.num_ = r.num_.times_monomial(e, c);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RationalFunction RationalFunction::times_binomial_power(const ExponentVector& m, int k) const {
  RationalFunction r = *this;
  r.adopt_arity(m.arity());
  if (k < 0) {
    r.add_factor(m, -k);
    return r;
  }
  if (m.is_zero()) return RationalFunction::constant(0, r.arity_);
  // Cancel against an existing factor before expanding.
  ExponentVector key = m.is_positive() ? m : -m;
  auto it = r.den_.find(key);
  int left = k;
  if (it != r.den_.end()) {
    const int used = std::min(left, it->second);
    if (key != m) {
      // (1 - m) = -m (1 - m^-1)
      r.num_ = r.num_.times_monomial(m.scaled(used), used % 2 == 0 ? Rational(1) : Rational(-1));
    }
    it->second -= used;
    if (it->second == 0) r.den_.erase(it);
    left -= used;
  }
  r.num_ = times_binomials(std::move(r.num_), m, left);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.size() != 1) throw std::domain_error("inverse needs a single-term numerator");
  const auto& t = num_.terms().front();
  RationalFunction r(LaurentPolynomial::monomial(-t.exponent, Rational(1 / t.coefficient)));
  r.adopt_arity(arity_);
  r.num_ = r.num_ * denominator_polynomial();
  return r;
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction result = constant(1, arity_);
  RationalFunction base = *this;
  for (unsigned e = static_cast<unsigned>(k); e > 0; e >>= 1) {
    if (e & 1u) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

RationalFunction RationalFunction::dual() const {
  RationalFunction r(num_.dual());
  r.arity_ = arity_;
  // 1/(1 - m^-1) = -m/(1 - m)
  for (const auto& [m, k] : den_) {
    r.num_ = r.num_.times_monomial(m.scaled(k), k % 2 == 0 ? Rational(1) : Rational(-1));
    r.den_[m] = k;
  }
  return r;
}

RationalFunction RationalFunction::adams(int k) const {
  if (k < 1) throw std::invalid_argument("Adams operation needs k >= 1");
  RationalFunction r(num_.adams(k));
  r.arity_ = arity_;
  for (const auto& [m, mult] : den_) r.den_[m.scaled(k)] = mult;
  return r;
}

RationalFunction RationalFunction::embedded(std::size_t new_arity) const {
  RationalFunction r(num_.embedded(new_arity));
  for (const auto& [m, k] : den_) r.den_[m.embedded(new_arity)] = k;
  return r;
}

RationalFunction RationalFunction::reduced() const {
  RationalFunction r = *this;
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

RationalFunction RationalFunction::specialize(const Substitution& s) const {
  RationalFunction r(s.apply(num_));
  r.arity_ = s.target_arity();
  r.num_ = r.num_.embedded(r.arity_);
  Rational scale = 1;
  for (const auto& [m, k] : den_) {
    auto [e, c] = s.apply(m);
    if (e.is_zero()) {
      const Rational value = 1 - c;
      if (value == 0) throw DegeneracyError("denominator vanishes under specialization", describe(m));
      scale /= rational_pow(value, k);
    } else if (c == 1) {
      r.add_factor(e, k);
    } else {
      throw std::domain_error("numeric specialization must make every denominator factor constant");
    }
  }
  r.num_ *= scale;
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

Rational RationalFunction::evaluate(const EvaluationPoint& point) const {
  Rational d = 1;
  for (const auto& [m, k] : den_) {
    const Rational f = 1 - point.monomial(m);
    if (f == 0) throw DegeneracyError("denominator vanishes at evaluation point", describe(m));
    d *= rational_pow(f, k);
  }
  return boxcount::evaluate(num_, point) / d;
}

RationalFunction RationalFunction::sum(std::span<const RationalFunction> terms) {
  Denominator lcm;
  std::size_t arity = 0;
  for (const auto& t : terms) {
    if (t.arity_ != 0) arity = t.arity_;
    if (t.is_zero()) continue;
    for (const auto& [m, k] : t.den_) lcm[m] = std::max(lcm[m], k);
  }
  LaurentPolynomial num(arity);
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    require_same_arity(t.arity_ == 0 ? arity : t.arity_, arity, "rational function sum");
    num += raise_to(t.num_, t.den_, lcm);
  }
  RationalFunction r(num);
  r.arity_ = arity;
  r.num_ = r.num_.embedded(arity);
  if (!r.num_.is_zero()) r.den_ = std::move(lcm);
  return r;
}

bool ratfun_equal(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  RationalFunction::Denominator only_a, only_b;
  for (const auto& [m, k] : a.den_) {
    auto it = b.den_.find(m);
    const int common = it == b.den_.end() ? 0 : std::min(k, it->second);
    if (k > common) only_a[m] = k - common;
  }
  for (const auto& [m, k] : b.den_) {
    auto it = a.den_.find(m);
    const int common = it == a.den_.end() ? 0 : std::min(k, it->second);
    if (k > common) only_b[m] = k - common;
  }
  LaurentPolynomial lhs = raise_to(a.num_, {}, only_b);
  LaurentPolynomial rhs = raise_to(b.num_, {}, only_a);
  return lhs == rhs;
}

}  // namespace boxcount
