#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace boxcount {

inline constexpr std::size_t kMaxVariables = 14;

// A monomial exponent on the half-integer lattice. Entries are stored
// doubled, so t^(1/2) has stored entry 1 and t has stored entry 2.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t arity);

  static ExponentVector from_doubled(std::span<const int> doubled);
  static ExponentVector from_doubled(std::initializer_list<int> doubled);
  static ExponentVector from_integers(std::span<const int> exponents);
  static ExponentVector from_integers(std::initializer_list<int> exponents);
  // The unit vector for variable `index` with integer exponent `power`.
  static ExponentVector unit(std::size_t arity, std::size_t index, int power = 1);

  std::size_t arity() const noexcept { return arity_; }
  int doubled(std::size_t i) const noexcept { return entries_[i]; }
  void set_doubled(std::size_t i, int value) noexcept { entries_[i] = value; }

  bool is_zero() const noexcept;
  bool is_integral() const noexcept;
  // Integer exponent of variable i; requires the entry to be even.
  int integer(std::size_t i) const;

  // Total doubled degree.
  long degree() const noexcept;

  // Orientation used to pick one of m, 1/m as canonical: the first
  // nonzero entry is positive.
  bool is_positive() const noexcept;

  ExponentVector operator-() const noexcept;
  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  ExponentVector scaled(int k) const noexcept;
  // Same entries, arity enlarged with zeros.
  ExponentVector embedded(std::size_t new_arity) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept;
  // Graded lexicographic: total degree first, then entries left to right.
  friend std::strong_ordering operator<=>(const ExponentVector& a,
                                          const ExponentVector& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::array<std::int32_t, kMaxVariables> entries_{};
  std::uint8_t arity_ = 0;
};

void require_same_arity(std::size_t a, std::size_t b, const char* where);

}  // namespace boxcount

template <>
struct std::hash<boxcount::ExponentVector> {
  std::size_t operator()(const boxcount::ExponentVector& e) const noexcept { return e.hash(); }
};
