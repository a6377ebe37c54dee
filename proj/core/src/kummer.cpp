#include "orddiv/kummer.hpp"

#include "orddiv/density.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orddiv::kummer {
namespace {

int nu2(u64 n) { return n == 0 ? 64 : __builtin_ctzll(n); }

u64 pow2(int exponent) {
  if (exponent >= 63) {
    throw std::overflow_error("power of two exceeds 64 bits");
  }
  return u64(1) << exponent;
}

u64 lcm_checked(u64 a, u64 b) { return arith::checked_mul(a / std::gcd(a, b), b); }

u64 magnitude(i64 v) { return v < 0 ? u64(0) - static_cast<u64>(v) : static_cast<u64>(v); }

// ε(kr,k) as a small fraction.
struct Correction {
  u64 num;
  u64 den;
};

Correction correction(const DegreeParams& params, u64 kr, u64 k) {
  const auto& dec = params.decomposition();
  const u64 r = kr / k;
  const u64 n_r = params.n_for(r);
  if (kr % n_r == 0) {
    return {2, 1};
  }
  if (dec.sign < 0 && r % 2 == 1) {
    const int two_adic_h = nu2(dec.h);
    if (k % 2 == 0 && nu2(k) < two_adic_h + 1) {
      return {1, 2};
    }
  }
  return {1, 1};
}

// One term μ(α)(αv,h)/(φ(dv) αv) of the S-sums.
ExactRational s_term(u64 d, u64 h, const arith::SignedDivisor& alpha, u64 v) {
  const u64 av = arith::checked_mul(alpha.divisor, v);
  return ExactRational(BigInt(alpha.mu) * std::gcd(av, h), BigInt(arith::euler_phi(arith::checked_mul(d, v))) * av);
}

template <typename Keep>
ExactRational truncated_sum(u64 d, u64 h, u64 vmax, Keep keep) {
  if (d == 0 || h == 0 || vmax == 0) {
    throw std::invalid_argument("truncated sum: d, h and vmax must be positive");
  }
  const auto alphas = arith::squarefree_divisors(d);
  ExactRational total;
  for (u64 v : arith::divisors_of_dinfty(d, vmax)) {
    for (const auto& alpha : alphas) {
      if (keep(v, alpha.divisor)) {
        total += s_term(d, h, alpha, v);
      }
    }
  }
  return total;
}

}  // namespace

DegreeParams::DegreeParams(const BaseDecomposition& decomposition)
    : dec_(decomposition), disc_abs_(magnitude(decomposition.disc)), two_adic_h_(nu2(decomposition.h)) {
  const bool four_mod_eight = disc_abs_ % 8 == 4;
  const bool zero_mod_eight = disc_abs_ % 8 == 0;
  if ((two_adic_h_ == 0 && four_mod_eight) || (two_adic_h_ == 1 && zero_mod_eight)) {
    m_ = disc_abs_ / 2;
  } else {
    m_ = lcm_checked(pow2(two_adic_h_ + 2), disc_abs_);
  }
}

u64 DegreeParams::n_for(u64 r) const {
  if (r == 0) {
    throw std::invalid_argument("n_for: r must be positive");
  }
  if (dec_.sign < 0 && r % 2 == 1) {
    return m_;
  }
  return lcm_checked(pow2(two_adic_h_ + nu2(r) + 1), disc_abs_);
}

ExactRational DegreeParams::epsilon(u64 kr, u64 k) const {
  if (k == 0 || kr == 0 || kr % k != 0) {
    throw std::invalid_argument("epsilon: k must divide kr");
  }
  const auto c = correction(*this, kr, k);
  return ExactRational(BigInt(c.num), BigInt(c.den));
}

u64 DegreeParams::degree(u64 kr, u64 k) const {
  if (k == 0 || kr == 0 || kr % k != 0) {
    throw std::invalid_argument("degree: k = " + std::to_string(k) + " must divide kr = " + std::to_string(kr));
  }
  const auto c = correction(*this, kr, k);
  // φ(kr) k / (ε (k,h)) with ε = num/den, kept in integers.
  const u64 top = arith::checked_mul(arith::checked_mul(arith::euler_phi(kr), k), c.den);
  const u64 bottom = arith::checked_mul(c.num, std::gcd(k, dec_.h));
  if (top % bottom != 0) {
    throw std::logic_error("degree: non-integral field degree for kr = " + std::to_string(kr) +
                           ", k = " + std::to_string(k));
  }
  return top / bottom;
}

u64 degree(u64 kr, u64 k, const BaseDecomposition& decomposition) {
  return DegreeParams(decomposition).degree(kr, k);
}

ExactRational series_block(const DegreeParams& params, u64 d, u64 v) {
  const u64 dv = arith::checked_mul(d, v);
  ExactRational block;
  for (const auto& alpha : arith::squarefree_divisors(d)) {
    const u64 deg = params.degree(dv, arith::checked_mul(alpha.divisor, v));
    block += ExactRational(BigInt(alpha.mu), BigInt(deg));
  }
  return block;
}

SeriesEstimate series_partial(const RationalBase& g, u64 d, u64 vmax) {
  if (d == 0 || vmax == 0) {
    throw std::invalid_argument("series_partial: d and vmax must be positive");
  }
  const DegreeParams params(base::decompose(g));
  SeriesEstimate out;
  out.d = d;
  out.vmax = vmax;
  for (u64 v : arith::divisors_of_dinfty(d, vmax)) {
    ExactRational block = series_block(params, d, v);
    if (block.sign() < 0) {
      throw std::logic_error("series_partial: negative block at v = " + std::to_string(v));
    }
    out.partial += block;
    out.blocks.push_back({v, std::move(block)});
  }
  out.tail_bound = tail_bound(g, d, vmax);
  return out;
}

ExactRational inverse_square_tail_bound(u64 d, u64 vmax) {
  if (d == 0 || vmax == 0) {
    throw std::invalid_argument("inverse_square_tail_bound: d and vmax must be positive");
  }
  ExactRational harmonic_total(1);
  for (const auto& pp : arith::factorize(d).factors()) {
    harmonic_total *= ExactRational(BigInt(pp.prime), BigInt(pp.prime - 1));
  }
  ExactRational head;
  for (u64 v : arith::divisors_of_dinfty(d, vmax)) {
    head += ExactRational(BigInt(1), BigInt(v));
  }
  return (harmonic_total - head) * ExactRational(BigInt(1), BigInt(vmax));
}

ExactRational tail_bound(const RationalBase& g, u64 d, u64 vmax) {
  const u64 h = base::decompose(g).h;
  const ExactRational scale(BigInt(2) * h, BigInt(arith::euler_phi(d)));
  return scale * inverse_square_tail_bound(d, vmax);
}

ExactRational closed_sum_s1(u64 d, u64 h) { return density::s_factor(d, h); }

ExactRational closed_sum_s2(u64 d, u64 h, u64 k) {
  if (d % 2 == 1) {
    return (nu2(h) + k == 0) ? closed_sum_s1(d, h) : ExactRational(0);
  }
  return closed_sum_s1(d, h) * ExactRational(BigInt(1), BigInt(1) << (2 * k));
}

ExactRational epsilon2(u64 d, u64 h, i64 disc) {
  if (d == 0 || h == 0 || disc == 0) {
    throw std::invalid_argument("epsilon2: arguments must be nonzero");
  }
  if (d % 2 != 0 || (4 * d) % magnitude(disc) != 0) {
    return ExactRational(0);
  }
  const int gamma = base::gamma_exponent(disc, d, h);
  return ExactRational(-1, 2).pow(1 << gamma);
}

ExactRational closed_sum_s3(u64 d, u64 h, i64 disc) {
  if (!base::is_fundamental_discriminant(disc)) {
    throw std::invalid_argument("closed_sum_s3: " + std::to_string(disc) + " is not a fundamental discriminant");
  }
  return epsilon2(d, h, disc) * closed_sum_s1(d, h);
}

ExactRational truncated_sum_s1(u64 d, u64 h, u64 vmax) {
  return truncated_sum(d, h, vmax, [](u64, u64) { return true; });
}

ExactRational truncated_sum_s2(u64 d, u64 h, u64 k, u64 vmax) {
  const u64 threshold = static_cast<u64>(nu2(h)) + k;
  return truncated_sum(d, h, vmax, [threshold](u64 v, u64) { return static_cast<u64>(nu2(v)) >= threshold; });
}

ExactRational truncated_sum_s3(u64 d, u64 h, i64 disc, u64 vmax) {
  if (!base::is_fundamental_discriminant(disc)) {
    throw std::invalid_argument("truncated_sum_s3: " + std::to_string(disc) + " is not a fundamental discriminant");
  }
  const u64 disc_abs = magnitude(disc);
  const int disc_two = nu2(disc_abs);
  const u64 disc_odd = disc_abs >> disc_two;
  // [2^{ν2(hd/α)+1}, D] | dv, checked prime by prime to avoid forming 2^{...}.
  return truncated_sum(d, h, vmax, [&](u64 v, u64 alpha) {
    const u64 dv = arith::checked_mul(d, v);
    const int needed_two = std::max(nu2(h) + nu2(d) - nu2(alpha) + 1, disc_two);
    return nu2(dv) >= needed_two && dv % disc_odd == 0;
  });
}

ExactRational truncated_sum_tail_bound(u64 d, u64 h, u64 vmax) {
  const u64 alpha_count = arith::squarefree_divisors(d).size();
  return ExactRational(BigInt(alpha_count) * h, BigInt(arith::euler_phi(d))) * inverse_square_tail_bound(d, vmax);
}

}  // namespace orddiv::kummer
