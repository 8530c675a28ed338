#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fatcat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class IntegerOverflow : public std::overflow_error {
 public:
  IntegerOverflow() : std::overflow_error("int64 overflow") {}
};

/// int64 whose arithmetic throws IntegerOverflow instead of wrapping.
/// Elimination kernels run on this first and fall back to Integer.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(implicit)

  [[nodiscard]] constexpr std::int64_t value() const { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw IntegerOverflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw IntegerOverflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw IntegerOverflow();
    return r;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (a.v_ == INT64_MIN && b.v_ == -1) throw IntegerOverflow();
    return a.v_ / b.v_;
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  CheckedInt operator-() const {
    if (v_ == INT64_MIN) throw IntegerOverflow();
    return -v_;
  }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;
  friend constexpr bool operator==(CheckedInt, CheckedInt) = default;

 private:
  std::int64_t v_ = 0;
};

inline CheckedInt abs(CheckedInt a) { return a.value() < 0 ? -a : a; }

inline Integer to_integer(CheckedInt a) { return Integer(a.value()); }
inline Integer to_integer(const Integer& a) { return a; }
inline Integer to_integer(std::int64_t a) { return Integer(a); }

inline std::string to_string(const Integer& a) { return a.str(); }
std::string to_string(const Rational& q);

/// Parses "p", "p/q", or a decimal literal such as "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace fatcat
