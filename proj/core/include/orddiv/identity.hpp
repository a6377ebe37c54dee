#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orddiv/base.hpp"

namespace orddiv::census {

using arith::i64;
using arith::u64;
using base::RationalBase;

inline constexpr u64 kDefaultFactoringBudget = 10'000'000;

/// Per-v terms of N_g(d)(x) = Σ_{v | d^∞} Σ_{α | d} μ(α) π_{K_{dv,αv}}(x).
struct IdentityBlock {
  u64 v = 1;
  /// Σ_α μ(α) #{p <= x : p ≡ 1 (mod dv), αv | r_p(g)}
  i64 splitting_sum = 0;
  /// #{p <= x : p ≡ 1 (mod dv), v | r_p(g), (r_p(g)/v, d) = 1}
  u64 class_count = 0;
};

struct KeyIdentityReport {
  u64 considered = 0;  // odd p <= x with p ∤ d g1 g2
  u64 lhs = 0;         // #{considered p : d | ord_p(g)}
  i64 rhs = 0;         // Σ_v splitting_sum
  std::vector<IdentityBlock> blocks;
  u64 multiply_classified = 0;  // primes matching the class condition for more than one v

  /// lhs = rhs, every block equals its class count (hence is nonnegative),
  /// and no prime is classified twice.
  bool holds() const;
};

/// Evaluates both sides of the identity over odd primes p <= x, excluding
/// p | d g1 g2 from both. Throws std::invalid_argument when x exceeds budget.
KeyIdentityReport verify_key_identity(const RationalBase& g, u64 d, u64 x, u64 budget = kDefaultFactoringBudget);

struct OrderFlipReport {
  bool holds = true;
  u64 primes_checked = 0;
  std::optional<u64> first_failure;
};

/// Checks ord_p(-g) against ord_p(g) (doubling when odd, halving when
/// ≡ 2 mod 4, equal when 4 | ord) for odd p <= x with p ∤ g1 g2. Requires g > 0.
OrderFlipReport verify_order_flip(const RationalBase& g, u64 x, u64 budget = kDefaultFactoringBudget);

/// Counts of considered primes p <= x keyed by gcd(ord_p(g), d); the values
/// sum to the considered count and the entry for d is N_g(d)(x).
std::map<u64, u64> order_gcd_partition(const RationalBase& g, u64 d, u64 x, u64 budget = kDefaultFactoringBudget);

}  // namespace orddiv::census
