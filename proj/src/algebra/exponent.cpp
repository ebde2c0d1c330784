#include "boxcount/algebra/exponent.hpp"

#include <algorithm>
#include <stdexcept>

#include "boxcount/errors.hpp"

namespace boxcount {

namespace {

void check_arity(std::size_t n) {
  if (n > kMaxVariables) {
    throw ArityError("exponent lattice supports at most " + std::to_string(kMaxVariables) +
                     " variables, got " + std::to_string(n));
  }
}

}  // namespace

void require_same_arity(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw ArityError(std::string(where) + ": arity mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

ExponentVector::ExponentVector(std::size_t arity) {
  check_arity(arity);
  arity_ = static_cast<std::uint8_t>(arity);
}

ExponentVector ExponentVector::from_doubled(std::span<const int> doubled) {
  ExponentVector e(doubled.size());
  for (std::size_t i = 0; i < doubled.size(); ++i) e.entries_[i] = doubled[i];
  return e;
}

ExponentVector ExponentVector::from_doubled(std::initializer_list<int> doubled) {
  return from_doubled(std::span<const int>(doubled.begin(), doubled.size()));
}

ExponentVector ExponentVector::from_integers(std::span<const int> exponents) {
  ExponentVector e(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) e.entries_[i] = 2 * exponents[i];
  return e;
}

ExponentVector ExponentVector::from_integers(std::initializer_list<int> exponents) {
  return from_integers(std::span<const int>(exponents.begin(), exponents.size()));
}

ExponentVector ExponentVector::unit(std::size_t arity, std::size_t index, int power) {
  ExponentVector e(arity);
  if (index >= arity) throw ArityError("unit exponent index out of range");
  e.entries_[index] = 2 * power;
  return e;
}

bool ExponentVector::is_zero() const noexcept {
  for (std::size_t i = 0; i < arity_; ++i)
    if (entries_[i] != 0) return false;
  return true;
}

bool ExponentVector::is_integral() const noexcept {
  for (std::size_t i = 0; i < arity_; ++i)
    if (entries_[i] % 2 != 0) return false;
  return true;
}

int ExponentVector::integer(std::size_t i) const {
  if (entries_[i] % 2 != 0) throw std::domain_error("half-integer exponent where integer expected");
  return entries_[i] / 2;
}

long ExponentVector::degree() const noexcept {
  long d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += entries_[i];
  return d;
}

bool ExponentVector::is_positive() const noexcept {
  for (std::size_t i = 0; i < arity_; ++i) {
    if (entries_[i] > 0) return true;
    if (entries_[i] < 0) return false;
  }
  return false;
}

ExponentVector ExponentVector::operator-() const noexcept {
  ExponentVector e = *this;
  for (std::size_t i = 0; i < arity_; ++i) e.entries_[i] = -e.entries_[i];
  return e;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (other.arity_ == 0) return *this;
  if (arity_ == 0) {
    *this = other;
    return *this;
  }
  require_same_arity(arity_, other.arity_, "exponent addition");
  for (std::size_t i = 0; i < arity_; ++i) entries_[i] += other.entries_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  return *this += -other;
}

ExponentVector ExponentVector::scaled(int k) const noexcept {
  ExponentVector e = *this;
  for (std::size_t i = 0; i < arity_; ++i) e.entries_[i] *= k;
  return e;
}

ExponentVector ExponentVector::embedded(std::size_t new_arity) const {
  if (new_arity < arity_) throw ArityError("cannot embed into a smaller lattice");
  ExponentVector e(new_arity);
  std::copy_n(entries_.begin(), arity_, e.entries_.begin());
  return e;
}

bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
  if (a.arity_ != b.arity_) return a.is_zero() && b.is_zero();
  for (std::size_t i = 0; i < a.arity_; ++i)
    if (a.entries_[i] != b.entries_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t n = std::max(a.arity_, b.arity_);
  for (std::size_t i = 0; i < n; ++i) {
    const int x = i < a.arity_ ? a.entries_[i] : 0;
    const int y = i < b.arity_ ? b.entries_[i] : 0;
    if (auto c = x <=> y; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t ExponentVector::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  std::size_t n = arity_;
  while (n > 0 && entries_[n - 1] == 0) --n;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(entries_[i])) + 0x9e3779b97f4a7c15ull +
         (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace boxcount
