#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "orddiv/base.hpp"

namespace b = orddiv::base;
using oracle::i64;
using oracle::u64;

namespace {

// Largest h with n an exact h-th power, by brute force over integer roots.
u64 exact_power_exponent(u64 n) {
  if (n == 1) return 0;
  u64 best = 1;
  for (u64 h = 2; (1ULL << h) <= n; ++h) {
    const auto root = static_cast<u64>(std::llround(std::pow(static_cast<double>(n), 1.0 / h)));
    for (u64 r = root > 1 ? root - 1 : 1; r <= root + 1; ++r) {
      u64 acc = 1;
      for (u64 i = 0; i < h && acc <= n; ++i) acc *= r;
      if (acc == n && r > 1) best = h;
    }
  }
  return best;
}

i64 fundamental_discriminant(u64 num, u64 den) {
  u64 kernel = 1;
  for (const auto& [q, e] : oracle::factor(num * den)) {
    if (e % 2) kernel *= q;
  }
  return static_cast<i64>(kernel % 4 == 1 ? kernel : 4 * kernel);
}

}  // namespace

TEST_CASE("rational base parsing and guards") {
  CHECK(b::RationalBase::parse("-4").num() == -4);
  const auto half = b::RationalBase::parse("6/-12");
  CHECK(half.num() == -1);
  CHECK(half.den() == 2);
  CHECK(half.to_string() == "-1/2");
  for (const char* bad : {"1", "-1", "0", "2/2", "-3/3", "0/5"}) {
    CHECK_THROWS_AS(b::RationalBase::parse(bad), std::invalid_argument);
  }
  CHECK_THROWS(b::RationalBase(1, 0));
  CHECK_THROWS(b::RationalBase::parse("two"));
  CHECK_THROWS(b::RationalBase(std::numeric_limits<i64>::min()));
  CHECK(b::RationalBase(12, 5).involves_prime(3));
  CHECK(b::RationalBase(12, 5).involves_prime(5));
  CHECK_FALSE(b::RationalBase(12, 5).involves_prime(7));
}

TEST_CASE("decomposition of the reference bases") {
  struct Row {
    i64 g;
    int sign;
    u64 g0;
    u64 h;
    i64 disc;
  };
  for (const Row& r : {Row{2, 1, 2, 1, 8}, Row{3, 1, 3, 1, 12}, Row{4, 1, 2, 2, 8}, Row{-2, -1, 2, 1, 8},
                       Row{-3, -1, 3, 1, 12}, Row{-4, -1, 2, 2, 8}, Row{-9, -1, 3, 2, 12}, Row{5, 1, 5, 1, 5},
                       Row{64, 1, 2, 6, 8}, Row{-8, -1, 2, 3, 8}, Row{6, 1, 6, 1, 24}, Row{72, 1, 72, 1, 8}}) {
    CAPTURE(r.g);
    const auto dec = b::decompose(b::RationalBase(r.g));
    CHECK(dec.sign == r.sign);
    CHECK(dec.g0_num == r.g0);
    CHECK(dec.g0_den == 1);
    CHECK(dec.h == r.h);
    CHECK(dec.disc == r.disc);
  }
  const auto quarter = b::decompose(b::RationalBase(1, 4));
  CHECK(quarter.g0_num == 1);
  CHECK(quarter.g0_den == 2);
  CHECK(quarter.h == 2);
  CHECK(quarter.disc == 8);
  const auto frac = b::decompose(b::RationalBase(-27, 8));
  CHECK(frac.sign == -1);
  CHECK(frac.g0_num == 3);
  CHECK(frac.g0_den == 2);
  CHECK(frac.h == 3);
  CHECK(frac.disc == 24);
}

TEST_CASE("decomposition agrees with brute-force roots") {
  for (i64 g = 2; g <= 3000; ++g) {
    const auto dec = b::decompose(b::RationalBase(g));
    const u64 h = exact_power_exponent(static_cast<u64>(g));
    CAPTURE(g);
    REQUIRE(dec.h == h);
    u64 back = 1;
    for (u64 i = 0; i < h; ++i) back *= dec.g0_num;
    CHECK(back == static_cast<u64>(g));
    CHECK(dec.disc == fundamental_discriminant(dec.g0_num, 1));
    CHECK(b::decompose(b::RationalBase(-g)).h == h);
  }
}

TEST_CASE("discriminants") {
  CHECK(b::discriminant_of_sqrt(2, 1) == 8);
  CHECK(b::discriminant_of_sqrt(5, 1) == 5);
  CHECK(b::discriminant_of_sqrt(3, 2) == 24);
  CHECK(b::discriminant_of_sqrt(1, 2) == 8);
  CHECK(b::discriminant_of_sqrt(12, 1) == 12);
  CHECK_THROWS(b::discriminant_of_sqrt(9, 1));
  CHECK_THROWS(b::discriminant_of_sqrt(2, 4));
  CHECK(b::quadratic_discriminant(-4, 1) == -4);
  CHECK(b::quadratic_discriminant(-3, 1) == -3);
  CHECK(b::quadratic_discriminant(-2, 1) == -8);
  CHECK(b::quadratic_discriminant(-1, 2) == -8);
  CHECK(b::quadratic_discriminant(-9, 1) == -4);
  for (i64 D : {5, 8, 12, 13, 24, -3, -4, -8, -7, 28}) CHECK(b::is_fundamental_discriminant(D));
  for (i64 D : {1, 4, 9, 16, 2, 3, 6, 20, -12, 0}) CHECK_FALSE(b::is_fundamental_discriminant(D));
}

TEST_CASE("gamma exponent") {
  CHECK(b::gamma_exponent(8, 2, 1) == 2);
  CHECK(b::gamma_exponent(8, 4, 1) == 1);
  CHECK(b::gamma_exponent(8, 8, 1) == 0);
  CHECK(b::gamma_exponent(8, 2, 2) == 1);
  CHECK(b::gamma_exponent(12, 12, 1) == 0);
  CHECK(b::gamma_exponent(5, 2, 1) == 0);
  CHECK(b::gamma_exponent(-8, 2, 1) == 2);
  CHECK_THROWS(b::gamma_exponent(8, 3, 1));
}
