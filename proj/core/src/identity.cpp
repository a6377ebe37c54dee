#include "orddiv/identity.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "orddiv/order.hpp"
#include "orddiv/sieve.hpp"

namespace orddiv::census {
namespace {

void check_budget(u64 x, u64 budget) {
  if (x < 3) {
    throw std::invalid_argument("x must be at least 3");
  }
  if (x > budget || x > UINT32_MAX - 1) {
    throw std::invalid_argument("x = " + std::to_string(x) + " exceeds the factoring budget of " +
                                std::to_string(budget));
  }
}

// Calls fn(p, p_minus_1) for every odd prime p <= x.
template <typename Fn>
void for_each_factored_prime(u64 x, Fn&& fn) {
  const SmallestFactorTable table(static_cast<std::uint32_t>(x));
  for (std::uint32_t p = 3; p <= x; p += 2) {
    if (table.smallest_factor(p) == p) {
      fn(u64(p), factor_with_table(table, p - 1));
    }
  }
}

}  // namespace

bool KeyIdentityReport::holds() const {
  if (static_cast<i64>(lhs) != rhs || multiply_classified != 0) {
    return false;
  }
  for (const auto& b : blocks) {
    if (b.splitting_sum < 0 || static_cast<u64>(b.splitting_sum) != b.class_count) {
      return false;
    }
  }
  return true;
}

KeyIdentityReport verify_key_identity(const RationalBase& g, u64 d, u64 x, u64 budget) {
  if (d == 0) {
    throw std::invalid_argument("verify_key_identity: d must be positive");
  }
  check_budget(x, budget);

  KeyIdentityReport report;
  const auto alphas = arith::squarefree_divisors(d);
  if (d <= x) {
    for (u64 v : arith::divisors_of_dinfty(d, x / d)) {
      report.blocks.push_back({v, 0, 0});
    }
  }

  for_each_factored_prime(x, [&](u64 p, const arith::Factorization& p_minus_1) {
    if (d % p == 0 || g.involves_prime(p)) {
      return;
    }
    ++report.considered;
    const auto record = order_record(p, reduce_mod_p(g, p), p_minus_1);
    const u64 r = record.residual_index;
    if (record.order % d == 0) {
      ++report.lhs;
    }
    int classes = 0;
    for (auto& block : report.blocks) {
      const u64 dv = d * block.v;
      if ((p - 1) % dv != 0 || r % block.v != 0) {
        continue;
      }
      for (const auto& alpha : alphas) {
        if (r % (alpha.divisor * block.v) == 0) {
          block.splitting_sum += alpha.mu;
        }
      }
      if (std::gcd(r / block.v, d) == 1) {
        ++block.class_count;
        ++classes;
      }
    }
    if (classes > 1) {
      ++report.multiply_classified;
    }
  });

  for (const auto& block : report.blocks) {
    report.rhs += block.splitting_sum;
  }
  return report;
}

OrderFlipReport verify_order_flip(const RationalBase& g, u64 x, u64 budget) {
  if (g.sign() < 0) {
    throw std::invalid_argument("verify_order_flip: g must be positive");
  }
  check_budget(x, budget);
  OrderFlipReport report;
  for_each_factored_prime(x, [&](u64 p, const arith::Factorization& p_minus_1) {
    if (g.involves_prime(p)) {
      return;
    }
    ++report.primes_checked;
    const u64 gbar = reduce_mod_p(g, p);
    const u64 order = full_order(p, gbar, p_minus_1);
    const u64 flipped = full_order(p, p - gbar, p_minus_1);
    u64 expected = order;
    if (order % 2 == 1) {
      expected = 2 * order;
    } else if (order % 4 == 2) {
      expected = order / 2;
    }
    if (flipped != expected && report.holds) {
      report.holds = false;
      report.first_failure = p;
    }
  });
  return report;
}

std::map<u64, u64> order_gcd_partition(const RationalBase& g, u64 d, u64 x, u64 budget) {
  if (d == 0) {
    throw std::invalid_argument("order_gcd_partition: d must be positive");
  }
  check_budget(x, budget);
  std::map<u64, u64> classes;
  for_each_factored_prime(x, [&](u64 p, const arith::Factorization& p_minus_1) {
    if (g.involves_prime(p)) {
      return;
    }
    ++classes[std::gcd(full_order(p, reduce_mod_p(g, p), p_minus_1), d)];
  });
  return classes;
}

}  // namespace orddiv::census
