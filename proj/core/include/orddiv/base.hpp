#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "orddiv/arith.hpp"
#include "orddiv/rational.hpp"

namespace orddiv::base {

using arith::i64;
using arith::u64;

/// A rational g = g1/g2 in lowest terms with g2 > 0 and g not in {-1, 0, 1}.
class RationalBase {
 public:
  /// Reduces and normalizes the sign. Throws std::invalid_argument when
  /// den = 0 or the value is -1, 0 or 1.
  RationalBase(i64 num, i64 den = 1);  // NOLINT

  /// Accepts "n" or "n/m".
  static RationalBase parse(std::string_view text);

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  int sign() const { return num_ < 0 ? -1 : 1; }

  RationalBase negated() const { return RationalBase(-num_, den_); }
  RationalBase absolute() const { return RationalBase(num_ < 0 ? -num_ : num_, den_); }

  ExactRational value() const { return ExactRational(BigInt(num_), BigInt(den_)); }
  std::string to_string() const;

  /// True when the prime p divides g1 * g2, i.e. ν_p(g) != 0.
  bool involves_prime(u64 p) const;

  friend bool operator==(const RationalBase&, const RationalBase&) = default;

 private:
  i64 num_;
  i64 den_;
};

/// g = sign * g0^h with g0 > 0 not an exact power and h maximal;
/// disc is the discriminant of Q(sqrt(g0)).
struct BaseDecomposition {
  RationalBase base;
  int sign = 1;
  u64 g0_num = 1;
  u64 g0_den = 1;
  u64 h = 1;
  i64 disc = 1;

  ExactRational g0() const { return ExactRational(BigInt(g0_num), BigInt(g0_den)); }
};

BaseDecomposition decompose(const RationalBase& base);

/// Discriminant of Q(sqrt(num/den)) for a positive non-square rational.
i64 discriminant_of_sqrt(u64 g0_num, u64 g0_den);

/// Discriminant of Q(sqrt(num/den)) for a rational of either sign that is
/// not a square; negative inputs give negative fundamental discriminants.
i64 quadratic_discriminant(i64 num, u64 den);

bool is_fundamental_discriminant(i64 disc);

/// γ = max{0, ν2(disc) - ν2(d) - ν2(h)}; requires even d.
int gamma_exponent(i64 disc, u64 d, u64 h);

}  // namespace orddiv::base
