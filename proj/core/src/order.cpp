#include "orddiv/order.hpp"

#include <stdexcept>
#include <string>

namespace orddiv::census {
namespace {

u64 magnitude(arith::i64 v) { return v < 0 ? u64(0) - static_cast<u64>(v) : static_cast<u64>(v); }

}  // namespace

u64 reduce_mod_p(const RationalBase& g, u64 p) {
  if (p < 3 || p % 2 == 0) {
    throw std::invalid_argument("reduce_mod_p: p must be an odd prime");
  }
  if (g.involves_prime(p)) {
    throw std::invalid_argument("reduce_mod_p: p = " + std::to_string(p) + " divides the numerator or denominator of g");
  }
  u64 num = magnitude(g.num()) % p;
  if (g.num() < 0) {
    num = p - num;
  }
  const u64 den = static_cast<u64>(g.den()) % p;
  if (den == 1) {
    return num;
  }
  // Fermat inverse; p is prime.
  return arith::mulmod(num, arith::powmod(den, p - 2, p), p);
}

bool order_divisible(u64 p, u64 gbar, const Factorization& d) {
  const u64 p_minus_1 = p - 1;
  if (p_minus_1 % d.value() != 0) {
    return false;
  }
  for (const auto& [ell, a] : d.factors()) {
    u64 cofactor = p_minus_1;
    int e = 0;
    while (cofactor % ell == 0) {
      cofactor /= ell;
      ++e;
    }
    // (p-1)/ℓ^{e-a+1} = cofactor · ℓ^{a-1}
    u64 exponent = cofactor;
    for (int i = 1; i < a; ++i) {
      exponent *= ell;
    }
    if (arith::powmod(gbar, exponent, p) == 1) {
      return false;
    }
  }
  return true;
}

u64 full_order(u64 p, u64 gbar, const Factorization& p_minus_1) {
  if (p_minus_1.value() != p - 1) {
    throw std::invalid_argument("full_order: factorization is not of p - 1");
  }
  u64 order = p - 1;
  for (const auto& [q, e] : p_minus_1.factors()) {
    for (int i = 0; i < e; ++i) {
      if (arith::powmod(gbar, order / q, p) != 1) {
        break;
      }
      order /= q;
    }
  }
  return order;
}

OrderRecord order_record(u64 p, u64 gbar, const Factorization& p_minus_1) {
  const u64 order = full_order(p, gbar, p_minus_1);
  return {p, gbar, order, (p - 1) / order};
}

Factorization factor_with_table(const SmallestFactorTable& table, std::uint32_t n) {
  if (n == 0 || n > table.limit()) {
    throw std::out_of_range("factor_with_table: n outside table");
  }
  std::vector<arith::PrimePower> factors;
  std::uint32_t rest = n;
  while (rest > 1) {
    const std::uint32_t q = table.smallest_factor(rest);
    int e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    factors.push_back({q, e});
  }
  return Factorization::from_trusted(n, std::move(factors));
}

}  // namespace orddiv::census
