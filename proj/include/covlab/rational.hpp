#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace covlab::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction. Always stored in lowest terms with a
/// positive denominator; all arithmetic is exact.
class Rational {
 public:
  Rational() = default;  // zero
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by design
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "3/4", "-7", "0.75", "12.". Decimal strings are converted
  /// exactly (no floating point involved). Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  /// Nearest double, correct even when numerator/denominator are huge.
  double to_double() const;

  /// "n/d", or just "n" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& r) { Rational out; out.value_ = -r.value_; return out; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend bool operator!=(const Rational& lhs, const Rational& rhs) { return lhs.value_ != rhs.value_; }
  friend bool operator<(const Rational& lhs, const Rational& rhs) { return lhs.value_ < rhs.value_; }
  friend bool operator<=(const Rational& lhs, const Rational& rhs) { return lhs.value_ <= rhs.value_; }
  friend bool operator>(const Rational& lhs, const Rational& rhs) { return lhs.value_ > rhs.value_; }
  friend bool operator>=(const Rational& lhs, const Rational& rhs) { return lhs.value_ >= rhs.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  // cpp_rational keeps the canonical lowest-terms form for us.
  boost::multiprecision::cpp_rational value_{0};
};

}  // namespace covlab::exact
