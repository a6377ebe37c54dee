#pragma once

// Deliberately naive reference implementations. Nothing here shares code
// with the library beyond the RationalBase value type.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "orddiv/base.hpp"

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

inline std::map<u64, int> factor(u64 n) {
  std::map<u64, int> out;
  for (u64 q = 2; q * q <= n; ++q) {
    while (n % q == 0) {
      ++out[q];
      n /= q;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline u64 phi(u64 n) {
  u64 count = 0;
  for (u64 k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

inline int mobius(u64 n) {
  int mu = 1;
  for (const auto& [q, e] : factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline u64 residue(const orddiv::base::RationalBase& g, u64 p) {
  const auto reduce = [p](i64 v) {
    const i64 r = v % static_cast<i64>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
  };
  const u64 num = reduce(g.num());
  const u64 den = reduce(g.den());
  // Fermat inverse; p stays below 2^32 so products fit.
  u64 inv = 1;
  u64 base = den;
  for (u64 e = p - 2; e; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  return num * inv % p;
}

// Multiplicative order by stepping through powers; p must be small.
inline u64 order(u64 gbar, u64 p) {
  u64 x = gbar % p;
  u64 k = 1;
  while (x != 1) {
    x = x * gbar % p;
    ++k;
  }
  return k;
}

struct Count {
  u64 counted = 0;
  u64 considered = 0;
};

// Odd primes 3 <= p <= x not dividing num*den, and those with d | ord_p(g).
inline Count census(const orddiv::base::RationalBase& g, u64 d, u64 x) {
  Count c;
  for (u64 p = 3; p <= x; p += 2) {
    if (!is_prime(p)) continue;
    const u64 gn = static_cast<u64>(g.num() < 0 ? -g.num() : g.num());
    if (gn % p == 0 || static_cast<u64>(g.den()) % p == 0) continue;
    ++c.considered;
    c.counted += order(residue(g, p), p) % d == 0;
  }
  return c;
}

}  // namespace oracle
