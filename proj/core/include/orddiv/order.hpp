#pragma once

#include <cstdint>

#include "orddiv/arith.hpp"
#include "orddiv/base.hpp"
#include "orddiv/sieve.hpp"

namespace orddiv::census {

using arith::Factorization;
using arith::u64;
using base::RationalBase;

/// g1 · g2^{-1} mod p, in [1, p-1]. Requires an odd prime p with p ∤ g1 g2.
u64 reduce_mod_p(const RationalBase& g, u64 p);

/// True iff d | ord_p(gbar), using one exponentiation per prime ℓ | d:
/// with e = ν_ℓ(p-1) and ℓ^a || d, need e >= a and gbar^{(p-1)/ℓ^{e-a+1}} != 1.
bool order_divisible(u64 p, u64 gbar, const Factorization& d);

/// Exact ord_p(gbar) given the factorization of p - 1.
u64 full_order(u64 p, u64 gbar, const Factorization& p_minus_1);

struct OrderRecord {
  u64 p = 0;
  u64 gbar = 0;
  u64 order = 0;
  u64 residual_index = 0;  // (p - 1)/order
};

OrderRecord order_record(u64 p, u64 gbar, const Factorization& p_minus_1);

/// Factorization of n <= table.limit() by repeated smallest-factor lookup.
Factorization factor_with_table(const SmallestFactorTable& table, std::uint32_t n);

}  // namespace orddiv::census
