#include "orddiv/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace orddiv {
namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string render_fixed(BigInt scaled, int places) {
  const bool negative = scaled.sign() < 0;
  if (negative) {
    scaled = -scaled;
  }
  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
  }
  return negative ? "-" + digits : digits;
}

BigInt pow10(int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) {
    scale *= 10;
  }
  return scale;
}

}  // namespace

ExactRational::ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::domain_error("ExactRational: zero denominator");
  }
  normalize();
}

void ExactRational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return ExactRational(parse_integer(text), 1);
  }
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den.is_zero()) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return ExactRational(parse_integer(text.substr(0, slash)), std::move(den));
}

ExactRational ExactRational::abs() const {
  ExactRational out = *this;
  if (out.num_.sign() < 0) {
    out.num_ = -out.num_;
  }
  return out;
}

ExactRational ExactRational::reciprocal() const {
  if (num_.is_zero()) {
    throw std::domain_error("ExactRational: reciprocal of zero");
  }
  return ExactRational(den_, num_);
}

ExactRational ExactRational::pow(int exponent) const {
  if (exponent < 0) {
    return reciprocal().pow(-exponent);
  }
  ExactRational out;
  out.num_ = boost::multiprecision::pow(num_, static_cast<unsigned>(exponent));
  out.den_ = boost::multiprecision::pow(den_, static_cast<unsigned>(exponent));
  return out;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  return *this += -rhs;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.num_.is_zero()) {
    throw std::domain_error("ExactRational: division by zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

ExactRational ExactRational::operator-() const {
  ExactRational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
  const BigInt a = lhs.num_ * rhs.den_;
  const BigInt b = rhs.num_ * lhs.den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactRational::to_string() const {
  if (den_ == 1) {
    return num_.str();
  }
  return num_.str() + "/" + den_.str();
}

std::string ExactRational::to_decimal(int places) const {
  if (places < 0) {
    throw std::invalid_argument("to_decimal: negative precision");
  }
  const BigInt scaled = abs().num_ * pow10(places);
  BigInt quotient = scaled / den_;
  const BigInt twice_rem = 2 * (scaled - quotient * den_);
  if (twice_rem > den_ || (twice_rem == den_ && (quotient & 1) != 0)) {
    ++quotient;
  }
  return render_fixed(sign() < 0 ? BigInt(-quotient) : quotient, places);
}

std::string ExactRational::to_decimal_truncated(int places) const {
  if (places < 0) {
    throw std::invalid_argument("to_decimal_truncated: negative precision");
  }
  const BigInt quotient = abs().num_ * pow10(places) / den_;
  return render_fixed(sign() < 0 ? BigInt(-quotient) : quotient, places);
}

double ExactRational::to_double() const {
  return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
  return os << value.to_string();
}

}  // namespace orddiv
