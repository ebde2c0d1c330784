#include "boxcount/algebra/laurent.hpp"

#include <algorithm>
#include <unordered_map>

#include "boxcount/errors.hpp"

namespace boxcount {

namespace {

using Term = LaurentPolynomial::Term;

bool term_less(const Term& a, const Term& b) { return a.exponent < b.exponent; }

// Merges two sorted term lists, scaling the second by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = a[i].exponent <=> b[j].exponent;
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coefficient + b[j].coefficient)
                            : Rational(a[i].coefficient - b[j].coefficient);
      if (s != 0) out.push_back({a[i].exponent, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(const Rational& c, std::size_t arity) {
  LaurentPolynomial p(arity);
  if (c != 0) p.terms_.push_back({ExponentVector(arity), c});
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& e, const Rational& c) {
  LaurentPolynomial p(e.arity());
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t arity, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.exponent.arity() != arity) {
      if (t.exponent.arity() == 0)
        t.exponent = t.exponent.embedded(arity);
      else
        require_same_arity(arity, t.exponent.arity(), "polynomial construction");
    }
  }
  std::sort(terms.begin(), terms.end(), term_less);
  LaurentPolynomial p(arity);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_sorted_terms(std::size_t arity, std::vector<Term> terms) {
  LaurentPolynomial p(arity);
  p.terms_ = std::move(terms);
  return p;
}

void LaurentPolynomial::adopt_arity(std::size_t other) {
  if (other == arity_ || other == 0) return;
  if (arity_ == 0) {
    for (auto& t : terms_) t.exponent = t.exponent.embedded(other);
    arity_ = other;
    return;
  }
  require_same_arity(arity_, other, "polynomial arithmetic");
}

bool LaurentPolynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Rational LaurentPolynomial::constant_term() const { return coefficient(ExponentVector(arity_)); }

Rational LaurentPolynomial::coefficient(const ExponentVector& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const ExponentVector& x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coefficient;
  return 0;
}

bool LaurentPolynomial::is_integral() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.exponent.is_integral(); });
}

bool LaurentPolynomial::has_integer_coefficients() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coefficient.get_den() == 1; });
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  LaurentPolynomial b = other;
  b.adopt_arity(arity_);
  adopt_arity(b.arity_);
  terms_ = merge(terms_, b.terms_, +1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  LaurentPolynomial b = other;
  b.adopt_arity(arity_);
  adopt_arity(b.arity_);
  terms_ = merge(terms_, b.terms_, -1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial x = a, y = b;
  x.adopt_arity(y.arity_);
  y.adopt_arity(x.arity_);
  if (x.is_zero() || y.is_zero()) return LaurentPolynomial(x.arity_);
  const LaurentPolynomial& small = x.size() <= y.size() ? x : y;
  const LaurentPolynomial& large = x.size() <= y.size() ? y : x;
  if (small.size() <= 4) {
    LaurentPolynomial acc(x.arity_);
    for (const auto& t : small.terms_) acc += large.times_monomial(t.exponent, t.coefficient);
    return acc;
  }
  std::unordered_map<ExponentVector, Rational> table;
  table.reserve(small.size() * large.size());
  Rational prod;
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) {
      mpq_mul(prod.get_mpq_t(), s.coefficient.get_mpq_t(), l.coefficient.get_mpq_t());
      table[s.exponent + l.exponent] += prod;
    }
  }
  std::vector<Term> terms;
  terms.reserve(table.size());
  for (auto& [e, c] : table)
    if (c != 0) terms.push_back({e, std::move(c)});
  std::sort(terms.begin(), terms.end(), term_less);
  return LaurentPolynomial::from_sorted_terms(x.arity_, std::move(terms));
}

LaurentPolynomial LaurentPolynomial::times_monomial(const ExponentVector& e,
                                                    const Rational& c) const {
  LaurentPolynomial p = *this;
  p.adopt_arity(e.arity());
  if (c == 0) {
    p.terms_.clear();
    return p;
  }
  for (auto& t : p.terms_) {
    t.exponent += e;
    if (c != 1) t.coefficient *= c;
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::times_binomial(const ExponentVector& m) const {
  LaurentPolynomial shifted = times_monomial(m);
  LaurentPolynomial p = *this;
  p.adopt_arity(shifted.arity_);
  p.terms_ = merge(p.terms_, shifted.terms_, -1);
  return p;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(1, arity_);
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::dual() const {
  LaurentPolynomial p(arity_);
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    p.terms_.push_back({-it->exponent, it->coefficient});
  return p;
}

LaurentPolynomial LaurentPolynomial::adams(int k) const {
  if (k <= 0) throw std::invalid_argument("Adams operation needs k >= 1");
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.exponent = t.exponent.scaled(k);
  return p;
}

LaurentPolynomial LaurentPolynomial::embedded(std::size_t new_arity) const {
  LaurentPolynomial p(new_arity);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.exponent.embedded(new_arity), t.coefficient});
  return p;
}

Rational LaurentPolynomial::sum_of_coefficients() const {
  Rational s = 0;
  for (const auto& t : terms_) s += t.coefficient;
  return s;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].exponent == b.terms_[i].exponent)) return false;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
  }
  return true;
}

bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c < 0;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient)
      return a.terms_[i].coefficient < b.terms_[i].coefficient;
  }
  return a.terms_.size() < b.terms_.size();
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& p, const ExponentVector& m) {
  if (m.is_zero()) throw std::invalid_argument("divide_exact: binomial 1 - m needs m != 1");
  if (p.is_zero()) return LaurentPolynomial(std::max(p.arity(), m.arity()));
  if (p.arity() != 0) require_same_arity(p.arity(), m.arity(), "divide_exact");
  const std::size_t arity = m.arity();

  // Along each line e + Z*m the restriction is a univariate Laurent
  // polynomial in m; (1 - m) divides it iff its coefficients sum to zero,
  // and the quotient is the running prefix sum.
  std::size_t pivot = 0;
  while (m.doubled(pivot) == 0) ++pivot;
  const long step = m.doubled(pivot);

  struct Entry {
    long position;
    const Rational* coefficient;
  };
  std::unordered_map<ExponentVector, std::vector<Entry>> lines;
  for (const auto& t : p.terms()) {
    const ExponentVector e = t.exponent.arity() == arity ? t.exponent : t.exponent.embedded(arity);
    const long k = floor_div(e.doubled(pivot), step);
    ExponentVector base = e - m.scaled(static_cast<int>(k));
    lines[base].push_back({k, &t.coefficient});
  }

  std::vector<LaurentPolynomial::Term> out;
  Rational running;
  for (auto& [base, entries] : lines) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.position < b.position; });
    running = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      running += *entries[i].coefficient;
      const long next = i + 1 < entries.size() ? entries[i + 1].position : entries[i].position + 1;
      if (running != 0) {
        if (i + 1 == entries.size()) return std::nullopt;
        for (long k = entries[i].position; k < next; ++k)
          out.push_back({base + m.scaled(static_cast<int>(k)), running});
      }
    }
  }
  return LaurentPolynomial::from_terms(arity, std::move(out));
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& p,
                                              const LaurentPolynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
  const std::size_t arity = std::max(p.arity(), divisor.arity());
  LaurentPolynomial rest = p.embedded(std::max(arity, p.arity()));
  const auto& lead = divisor.terms().back();
  const ExponentVector lead_exp = lead.exponent;
  std::vector<LaurentPolynomial::Term> quotient;
  while (!rest.is_zero()) {
    const auto& top = rest.terms().back();
    ExponentVector shift = top.exponent - lead_exp;
    for (std::size_t i = 0; i < shift.arity(); ++i)
      if (shift.doubled(i) < 0) return std::nullopt;
    Rational c = top.coefficient / lead.coefficient;
    quotient.push_back({shift, c});
    rest -= divisor.times_monomial(shift, c);
  }
  return LaurentPolynomial::from_terms(arity, std::move(quotient));
}

LaurentPolynomial binomial_product(std::size_t arity,
                                   std::span<const std::pair<ExponentVector, int>> factors) {
  LaurentPolynomial p = LaurentPolynomial::constant(1, arity);
  for (const auto& [m, k] : factors)
    for (int i = 0; i < k; ++i) p = p.times_binomial(m);
  return p;
}

}  // namespace boxcount
