#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>

namespace clifford3 {

using Rational = boost::rational<std::int64_t>;

/// Floor division; `den` must be positive.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return -floor_div(-num, den);
}

/// Least nonnegative residue.
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

constexpr bool congruent(std::int64_t a, std::int64_t b, std::int64_t n) {
  return mod(a - b, n) == 0;
}

inline std::int64_t floor(const Rational& q) {
  return floor_div(q.numerator(), q.denominator());
}

/// Exact half-integer, stored doubled.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt whole(std::int64_t v) { return HalfInt(2 * v); }
  /// The value v/2.
  static constexpr HalfInt half_of(std::int64_t v) { return HalfInt(v); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integral() const { return doubled_ % 2 == 0; }
  constexpr std::int64_t floor() const { return floor_div(doubled_, 2); }
  constexpr std::int64_t ceil() const { return ceil_div(doubled_, 2); }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(doubled_ + o.doubled_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(doubled_ - o.doubled_); }
  constexpr HalfInt operator-() const { return HalfInt(-doubled_); }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(std::int64_t doubled) : doubled_(doubled) {}
  std::int64_t doubled_ = 0;
};

}  // namespace clifford3
