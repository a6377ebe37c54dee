#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orddiv/rational.hpp"

namespace orddiv::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive 64-bit integer, ascending by prime.
class Factorization {
 public:
  Factorization() = default;  // the factorization of 1

  /// Builds from prime powers; validates ordering, primality and the product.
  Factorization(u64 value, std::vector<PrimePower> factors);

  /// Skips validation; for factorizations produced by a trusted routine.
  static Factorization from_trusted(u64 value, std::vector<PrimePower> factors);

  u64 value() const { return value_; }
  std::span<const PrimePower> factors() const& { return factors_; }
  // Keeps `for (auto pp : factorize(n).factors())` from dangling.
  std::vector<PrimePower> factors() && { return std::move(factors_); }
  bool empty() const { return factors_.empty(); }

  /// ν_p(value); 0 when p does not divide value.
  int exponent_of(u64 prime) const;
  std::size_t omega() const { return factors_.size(); }
  std::vector<u64> primes() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  u64 value_ = 1;
  std::vector<PrimePower> factors_;
};

u64 mulmod(u64 a, u64 b, u64 modulus);
u64 powmod(u64 base, u64 exponent, u64 modulus);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(u64 n);

/// Trial division by primes below 10^6, then Pollard-Brent with fixed seeds.
/// Throws std::invalid_argument for n = 0.
Factorization factorize(u64 n);

/// Multiplies two factorizations by merging exponents.
Factorization merge(const Factorization& lhs, const Factorization& rhs);

int mobius(u64 n);
u64 euler_phi(u64 n);

/// ν_p(n) for nonzero integers and rationals; p must be prime.
int valuation(u64 p, i64 n);
int valuation(u64 p, const ExactRational& n);

/// (h, d^∞) = ∏_{p | d} p^{ν_p(h)}.
u64 gcd_with_dinfty(u64 h, u64 d);

/// All v <= bound whose prime factors all divide d, ascending. [1] for d = 1.
std::vector<u64> divisors_of_dinfty(u64 d, u64 bound);

struct SignedDivisor {
  u64 divisor = 1;
  int mu = 1;
};

/// Squarefree divisors α of d with μ(α), ascending by α.
std::vector<SignedDivisor> squarefree_divisors(u64 d);

/// Primes below `limit`, ascending.
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

/// a * b, throwing std::overflow_error on 64-bit overflow.
u64 checked_mul(u64 a, u64 b);

}  // namespace orddiv::arith
