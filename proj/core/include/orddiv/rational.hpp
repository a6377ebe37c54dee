#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace orddiv {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with arbitrary-precision numerator and denominator.
///
/// Every constructor and arithmetic operator normalizes eagerly: the
/// denominator is positive, gcd(|num|, den) = 1, and zero is stored as 0/1.
/// Equality is therefore structural.
class ExactRational {
 public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  ExactRational(BigInt num, BigInt den);

  static ExactRational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  ExactRational abs() const;
  ExactRational reciprocal() const;
  ExactRational pow(int exponent) const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs);

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  /// Fixed-point rendering with `places` digits, rounded half to even.
  std::string to_decimal(int places) const;

  /// Fixed-point rendering with `places` digits, truncated toward zero.
  std::string to_decimal_truncated(int places) const;

  double to_double() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

}  // namespace orddiv
