#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boxcount/algebra/ratfun.hpp"

namespace boxcount {

// Coefficient ring hooks for TruncatedSeries.
template <class R>
struct SeriesTraits;

template <>
struct SeriesTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& r) { return r == 0; }
  static Rational inverse(const Rational& r) { return Rational(1 / r); }
  static Rational adams(const Rational& r, int) { return r; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct SeriesTraits<RationalFunction> {
  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction::constant(1); }
  static bool is_zero(const RationalFunction& r) { return r.is_zero(); }
  static RationalFunction inverse(const RationalFunction& r) { return r.inverse(); }
  static RationalFunction adams(const RationalFunction& r, int k) { return r.adams(k); }
  static bool equal(const RationalFunction& a, const RationalFunction& b) {
    return ratfun_equal(a, b);
  }
};

// Laurent series c_lower z^lower + ... known exactly through z^order.
// Coefficients above the order are unknown, never zero by assumption,
// and every operation returns the largest order it can guarantee.
template <class R>
class TruncatedSeries {
 public:
  using Traits = SeriesTraits<R>;

  TruncatedSeries() = default;
  // The zero series known through z^order.
  explicit TruncatedSeries(int order) : lower_(0), order_(order) {}

  static TruncatedSeries constant(R c, int order) {
    TruncatedSeries s(order);
    if (order >= 0) {
      s.coeffs_.assign(static_cast<std::size_t>(order) + 1, Traits::zero());
      s.coeffs_[0] = std::move(c);
    }
    s.trim();
    return s;
  }
  static TruncatedSeries one(int order) { return constant(Traits::one(), order); }
  static TruncatedSeries from_coefficients(int lower, std::vector<R> coeffs, int order) {
    TruncatedSeries s(order);
    s.lower_ = lower;
    s.coeffs_ = std::move(coeffs);
    const long keep = static_cast<long>(order) - lower + 1;
    if (keep <= 0) {
      s.coeffs_.clear();
    } else if (static_cast<long>(s.coeffs_.size()) > keep) {
      s.coeffs_.resize(static_cast<std::size_t>(keep));
    }
    s.trim();
    return s;
  }
  // c z^n through z^order.
  static TruncatedSeries monomial(int n, R c, int order) {
    return from_coefficients(n, std::vector<R>{std::move(c)}, order);
  }

  int order() const noexcept { return order_; }
  // Exponent of the first stored coefficient; the valuation once trimmed.
  int lower() const noexcept { return lower_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Smallest exponent with a nonzero coefficient, or order + 1 for zero.
  int valuation() const noexcept { return coeffs_.empty() ? order_ + 1 : lower_; }

  R coefficient(int n) const {
    if (n > order_) throw std::out_of_range("coefficient beyond truncation order");
    if (n < lower_ || n >= lower_ + static_cast<int>(coeffs_.size())) return Traits::zero();
    return coeffs_[static_cast<std::size_t>(n - lower_)];
  }

  TruncatedSeries truncated(int order) const {
    if (order > order_) throw std::invalid_argument("cannot raise the truncation order");
    return from_coefficients(lower_, coeffs_, order);
  }

  TruncatedSeries operator-() const {
    TruncatedSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    const int lower = std::min(a.lower_, b.lower_);
    std::vector<R> out;
    if (order >= lower) {
      out.assign(static_cast<std::size_t>(order - lower + 1), Traits::zero());
      a.accumulate_into(out, lower, order);
      b.accumulate_into(out, lower, order);
    }
    return from_coefficients(lower, std::move(out), order);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (-b);
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = product_order(a, b);
    if (a.is_zero() || b.is_zero()) return TruncatedSeries(order);
    const int lower = a.lower_ + b.lower_;
    if (order < lower) return TruncatedSeries(order);
    std::vector<R> out(static_cast<std::size_t>(order - lower + 1), Traits::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (Traits::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < out.size(); ++j) {
        if (Traits::is_zero(b.coeffs_[j])) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return from_coefficients(lower, std::move(out), order);
  }

  template <class S>
  TruncatedSeries scaled(const S& c) const {
    TruncatedSeries s = *this;
    for (auto& x : s.coeffs_) x *= c;
    s.trim();
    return s;
  }

  // Multiplication by z^n.
  TruncatedSeries shifted(int n) const {
    TruncatedSeries s = *this;
    s.lower_ += n;
    s.order_ += n;
    return s;
  }

  // Needs an invertible leading coefficient.
  TruncatedSeries inverse() const {
    if (is_zero()) throw std::domain_error("series inverse of zero");
    const int v = lower_;
    const int precision = order_ - v;
    const R c0_inv = Traits::inverse(coeffs_[0]);
    std::vector<R> out(static_cast<std::size_t>(precision) + 1, Traits::zero());
    out[0] = c0_inv;
    for (int n = 1; n <= precision; ++n) {
      R acc = Traits::zero();
      for (int j = 1; j <= n && j < static_cast<int>(coeffs_.size()); ++j) {
        if (Traits::is_zero(coeffs_[j])) continue;
        acc += coeffs_[j] * out[static_cast<std::size_t>(n - j)];
      }
      out[static_cast<std::size_t>(n)] = -(acc * c0_inv);
    }
    return from_coefficients(-v, std::move(out), precision - v);
  }

  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b.inverse();
  }

  // z -> z^k together with the Adams operation on coefficients.
  TruncatedSeries adams(int k) const {
    if (k < 1) throw std::invalid_argument("Adams operation needs k >= 1");
    if (is_zero()) return TruncatedSeries(order_ * k);
    std::vector<R> out(static_cast<std::size_t>(coeffs_.size() - 1) * k + 1, Traits::zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!Traits::is_zero(coeffs_[i])) out[i * k] = Traits::adams(coeffs_[i], k);
    // Exponents in (order_*k, order_*k + k) are not known.
    return from_coefficients(lower_ * k, std::move(out), order_ * k);
  }

  // exp(g) for g with no terms at z^n, n <= 0.
  TruncatedSeries exp() const {
    if (!is_zero() && lower_ < 1) throw std::domain_error("exp needs a series without z^0 term");
    const int order = order_;
    if (order < 0) return TruncatedSeries(order);
    std::vector<R> e(static_cast<std::size_t>(order) + 1, Traits::zero());
    e[0] = Traits::one();
    for (int n = 1; n <= order; ++n) {
      R acc = Traits::zero();
      for (int j = 1; j <= n; ++j) {
        const R gj = coefficient(j);
        if (Traits::is_zero(gj) || Traits::is_zero(e[static_cast<std::size_t>(n - j)])) continue;
        acc += (gj * e[static_cast<std::size_t>(n - j)]) * Rational(j);
      }
      e[static_cast<std::size_t>(n)] = acc * Rational(1, n);
    }
    return from_coefficients(0, std::move(e), order);
  }

  // log(a) for a = 1 + O(z).
  TruncatedSeries log() const {
    if (lower_ != 0 || !Traits::equal(coeffs_.empty() ? Traits::zero() : coeffs_[0], Traits::one()))
      throw std::domain_error("log needs constant term 1");
    const int order = order_;
    std::vector<R> l(static_cast<std::size_t>(std::max(order, 0)) + 1, Traits::zero());
    for (int n = 1; n <= order; ++n) {
      R acc = coefficient(n) * Rational(n);
      for (int j = 1; j < n; ++j) {
        const R an = coefficient(n - j);
        if (Traits::is_zero(l[static_cast<std::size_t>(j)]) || Traits::is_zero(an)) continue;
        acc -= (l[static_cast<std::size_t>(j)] * an) * Rational(j);
      }
      l[static_cast<std::size_t>(n)] = acc * Rational(1, n);
    }
    return from_coefficients(0, std::move(l), order);
  }

  friend bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    const int lower = std::min(a.valuation(), b.valuation());
    for (int n = lower; n <= order; ++n)
      if (!Traits::equal(a.coefficient(n), b.coefficient(n))) return false;
    return true;
  }

  const std::vector<R>& coefficients() const noexcept { return coeffs_; }

 private:
  static int product_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    // Unknown terms of a enter at order_a + 1 + valuation(b).
    const long oa = static_cast<long>(a.order_) + b.valuation();
    const long ob = static_cast<long>(b.order_) + a.valuation();
    return static_cast<int>(std::min(oa, ob));
  }

  void accumulate_into(std::vector<R>& out, int lower, int order) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const int n = lower_ + static_cast<int>(i);
      if (n > order) break;
      out[static_cast<std::size_t>(n - lower)] += coeffs_[i];
    }
  }

  // Drops zero coefficients at both ends so lower() is the valuation.
  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && Traits::is_zero(coeffs_[first])) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      lower_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (last > first && Traits::is_zero(coeffs_[last - 1])) --last;
    coeffs_ = std::vector<R>(std::make_move_iterator(coeffs_.begin() + static_cast<long>(first)),
                             std::make_move_iterator(coeffs_.begin() + static_cast<long>(last)));
    lower_ += static_cast<int>(first);
  }

  int lower_ = 0;
  int order_ = 0;
  std::vector<R> coeffs_;
};

using BoxSeries = TruncatedSeries<RationalFunction>;
using ScalarSeries = TruncatedSeries<Rational>;

// exp(sum_k psi_k(f)/k) for f without z^n terms, n <= 0.
template <class R>
TruncatedSeries<R> plethystic_exp(const TruncatedSeries<R>& f) {
  if (!f.is_zero() && f.lower() < 1)
    throw std::domain_error("plethystic exponential needs a series without z^0 term");
  const int order = f.order();
  TruncatedSeries<R> total(order);
  for (int k = 1; k <= order; ++k) {
    total = total + f.adams(k).truncated(order).scaled(Rational(1, k));
  }
  return total.exp();
}

}  // namespace boxcount
