#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "orddiv/density.hpp"
#include "orddiv/kummer.hpp"

namespace km = orddiv::kummer;
using orddiv::BigInt;
using orddiv::ExactRational;
using orddiv::base::RationalBase;
using oracle::u64;
using u32 = std::uint32_t;

namespace {

ExactRational q(const char* s) { return ExactRational::parse(s); }

u64 deg(long g, u64 kr, u64 k) { return km::degree(kr, k, orddiv::base::decompose(RationalBase(g))); }

u64 slow_pow(u64 b, u64 e, u64 p) {
  u64 out = 1;
  b %= p;
  while (e) {
    if (e & 1) out = out * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return out;
}

// Residual index (p-1)/ord_p(g) from the definition: the largest divisor
// t of p-1 with g^((p-1)/t) = 1.
u64 residual_index(u64 gbar, u64 p, const std::vector<u32>& spf) {
  std::map<u64, int> factors;
  for (u64 n = p - 1; n > 1; n /= spf[n]) ++factors[spf[n]];
  u64 t = 1;
  for (const auto& [ell, e] : factors) {
    u64 power = 1;
    for (int j = 1; j <= e; ++j) {
      const u64 cand = power * ell;
      if ((p - 1) % (t * cand) == 0 && slow_pow(gbar, (p - 1) / cand, p) == 1) power = cand;
    }
    t *= power;
  }
  return t;
}

}  // namespace

TEST_CASE("degrees of small radical extensions") {
  CHECK(deg(2, 1, 1) == 1);
  CHECK(deg(2, 2, 2) == 2);   // Q(sqrt 2)
  CHECK(deg(2, 4, 2) == 4);   // Q(i, sqrt 2)
  CHECK(deg(2, 8, 2) == 4);   // sqrt 2 lies in Q(zeta_8)
  CHECK(deg(2, 8, 1) == 4);
  CHECK(deg(2, 8, 4) == 8);
  CHECK(deg(-4, 4, 2) == 2);  // sqrt(-4) = 2i
  CHECK(deg(-4, 8, 4) == 4);  // (-4)^(1/4) = 1 + i
  CHECK(deg(-4, 2, 2) == 2);
  CHECK(deg(4, 2, 2) == 1);   // sqrt 4 is rational
  CHECK(deg(-3, 3, 1) == 2);
  CHECK(deg(-3, 6, 2) == 2);  // sqrt(-3) lies in Q(zeta_3)
  CHECK(deg(5, 5, 1) == 4);
  CHECK(deg(5, 10, 2) == 4);  // sqrt 5 lies in Q(zeta_5)
  CHECK(deg(3, 12, 2) == 4);  // sqrt 3 lies in Q(zeta_12)
  CHECK(deg(3, 12, 4) == 8);   // the square root of 3 is already there
  CHECK(deg(2, 3, 3) == 6);
  CHECK(deg(2, 24, 24) == 8 * 24 / 2);
  CHECK_THROWS(deg(2, 6, 4));
}

TEST_CASE("degree formula against prime splitting counts") {
  // A prime p splits completely in Q(zeta_kr, g^(1/k)) exactly when p = 1
  // mod kr and k divides the residual index, so the proportion of such
  // primes tends to 1/degree.
  constexpr u64 kLimit = 2'000'000;
  std::vector<u64> primes;
  std::vector<u32> spf(kLimit + 1, 0);
  for (u64 n = 2; n <= kLimit; ++n) {
    if (spf[n]) continue;
    if (n > 2) primes.push_back(n);
    for (u64 m = n; m <= kLimit; m += n) {
      if (!spf[m]) spf[m] = static_cast<u32>(n);
    }
  }
  const std::vector<RationalBase> bases = {2, 3, -2, -3, -4, 4, -9, 5, 6, 8, -8, 12, 9, RationalBase(1, 2),
                                           RationalBase(-1, 3)};
  for (const auto& g : bases) {
    const auto dec = orddiv::base::decompose(g);
    const km::DegreeParams params(dec);
    u64 considered = 0;
    std::vector<u64> p_list;
    std::vector<u64> idx;
    for (u64 p : primes) {
      if (g.involves_prime(p)) continue;
      ++considered;
      p_list.push_back(p);
      idx.push_back(residual_index(oracle::residue(g, p), p, spf));
    }
    for (u64 kr = 1; kr <= 24; ++kr) {
      for (u64 k = 1; k <= kr; ++k) {
        if (kr % k) continue;
        u64 hits = 0;
        for (std::size_t i = 0; i < p_list.size(); ++i) {
          hits += (p_list[i] - 1) % kr == 0 && idx[i] % k == 0;
        }
        const double expected = static_cast<double>(considered) / static_cast<double>(params.degree(kr, k));
        const double sigma = std::sqrt(expected);
        CAPTURE(g.to_string());
        CAPTURE(kr);
        CAPTURE(k);
        CAPTURE(hits);
        CAPTURE(expected);
        CHECK(std::abs(static_cast<double>(hits) - expected) <= 5 * sigma + 3);
      }
    }
  }
}

TEST_CASE("series for g = 2, d = 2 up to v = 8") {
  const auto est = km::series_partial(RationalBase(2), 2, 8);
  REQUIRE(est.blocks.size() == 4);
  CHECK(est.blocks[0].value == q("1/2"));
  CHECK(est.blocks[1].value == q("1/8"));
  CHECK(est.blocks[2].value == q("1/16"));
  CHECK(est.blocks[3].value == q("1/64"));
  CHECK(est.partial == q("45/64"));
  CHECK(est.tail_bound == q("1/32"));
  CHECK(est.brackets(q("17/24")));
}

TEST_CASE("series blocks are nonnegative and bracket the closed form") {
  for (long gv : {2L, 3L, 5L, 6L, 7L, 12L, -2L, -3L, -4L, -9L, 4L, 9L, -8L, 16L}) {
    const RationalBase g(gv);
    const km::DegreeParams params(orddiv::base::decompose(g));
    for (u64 d = 1; d <= 40; ++d) {
      CAPTURE(gv);
      CAPTURE(d);
      const auto exact = orddiv::density::density(g, d).delta;
      const auto est = km::series_partial(g, d, 4096);
      ExactRational running;
      for (const auto& blk : est.blocks) {
        CHECK(blk.value >= ExactRational(0));
        CHECK(blk.value <= ExactRational(BigInt(1), BigInt(params.degree(d * blk.v, blk.v))));
        running += blk.value;
      }
      CHECK(running == est.partial);
      CHECK(est.brackets(exact));
    }
  }
}

TEST_CASE("tail bound at least halves per doubling") {
  for (long gv : {2L, -4L, 3L, -9L}) {
    for (u64 d : {1ULL, 2ULL, 5ULL, 6ULL, 11ULL, 12ULL, 30ULL}) {
      ExactRational previous = km::tail_bound(RationalBase(gv), d, 1);
      for (u64 vmax = 2; vmax <= (1ULL << 20); vmax *= 2) {
        const auto t = km::tail_bound(RationalBase(gv), d, vmax);
        CAPTURE(d);
        CAPTURE(vmax);
        CHECK(t * ExactRational(2) <= previous);
        previous = t;
      }
    }
  }
  CHECK(km::tail_bound(RationalBase(2), 2, 1ULL << 20).to_double() < 1e-11);
}

TEST_CASE("inverse square tail bound dominates the true tail") {
  // Σ_{v | d^∞, v > V} 1/v² computed far out, against the bound at V.
  for (u64 d : {2ULL, 3ULL, 6ULL, 10ULL, 12ULL}) {
    for (u64 vmax : {1ULL, 4ULL, 16ULL, 100ULL}) {
      long double tail = 0;
      for (u64 v = vmax + 1; v <= 500'000; ++v) {
        bool smooth = true;
        u64 rest = v;
        for (u64 p = 2; p <= rest && p <= 13; ++p) {
          while (rest % p == 0) {
            if (d % p) smooth = false;
            rest /= p;
          }
        }
        if (smooth && rest == 1) tail += 1.0L / (static_cast<long double>(v) * v);
      }
      CAPTURE(d);
      CAPTURE(vmax);
      CHECK(static_cast<long double>(km::inverse_square_tail_bound(d, vmax).to_double()) >= tail);
    }
  }
}

TEST_CASE("closed sums match truncated sums within the bound") {
  for (u64 d = 1; d <= 12; ++d) {
    for (u64 h = 1; h <= 12; ++h) {
      const u64 vmax = 1 << 12;
      const auto bound = km::truncated_sum_tail_bound(d, h, vmax);
      CAPTURE(d);
      CAPTURE(h);
      CHECK((km::truncated_sum_s1(d, h, vmax) - km::closed_sum_s1(d, h)).abs() <= bound);
      for (u64 k = 0; k <= 2; ++k) {
        CAPTURE(k);
        CHECK((km::truncated_sum_s2(d, h, k, vmax) - km::closed_sum_s2(d, h, k)).abs() <= bound);
      }
      for (long D : {5L, 8L, 12L, 24L}) {
        CAPTURE(D);
        CHECK((km::truncated_sum_s3(d, h, D, vmax) - km::closed_sum_s3(d, h, D)).abs() <= bound);
      }
    }
  }
}

TEST_CASE("closed-sum corner values") {
  CHECK(km::closed_sum_s1(2, 1) == q("2/3"));
  CHECK(km::closed_sum_s2(2, 1, 1) == q("1/6"));
  CHECK(km::closed_sum_s2(3, 1, 0) == km::closed_sum_s1(3, 1));
  CHECK(km::closed_sum_s2(3, 1, 1) == ExactRational(0));
  CHECK(km::epsilon2(2, 1, 8) == q("1/16"));
  CHECK(km::epsilon2(8, 1, 8) == q("-1/2"));
  CHECK(km::epsilon2(3, 1, 12) == ExactRational(0));
  CHECK(km::epsilon2(2, 1, 12) == ExactRational(0));
  CHECK_THROWS(km::closed_sum_s3(2, 1, 9));
}
