#include "orddiv/density.hpp"

#include <stdexcept>

namespace orddiv::density {
namespace {

u64 disc_magnitude(arith::i64 disc) { return disc < 0 ? u64(0) - static_cast<u64>(disc) : static_cast<u64>(disc); }

bool disc_divides_4d(arith::i64 disc, u64 d) { return (4 * d) % disc_magnitude(disc) == 0; }

// (-1/2)^(2^γ)
ExactRational minus_half_tower(int gamma) { return ExactRational(-1, 2).pow(1 << gamma); }

}  // namespace

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::kOddD:
      return "odd-d";
    case CaseLabel::kSingleTwoNoDisc:
      return "2||d-no-disc";
    case CaseLabel::kSingleTwoDisc:
      return "2||d-disc";
    case CaseLabel::kFourNoDisc:
      return "4|d-no-disc";
    case CaseLabel::kFourDisc:
      return "4|d-disc";
  }
  return "unknown";
}

ExactRational s_factor(u64 d, u64 h) {
  if (d == 0 || h == 0) {
    throw std::invalid_argument("s_factor: d and h must be positive");
  }
  ExactRational out(BigInt(1), BigInt(d) * arith::gcd_with_dinfty(h, d));
  for (const auto& pp : arith::factorize(d).factors()) {
    const BigInt square = BigInt(pp.prime) * pp.prime;
    out *= ExactRational(square, square - 1);
  }
  return out;
}

ExactRational epsilon_table(int sign, int gamma) {
  if (gamma < 0 || gamma > 2) {
    throw std::invalid_argument("epsilon_table: gamma must be 0, 1 or 2");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("epsilon_table: sign must be +1 or -1");
  }
  static const ExactRational kPositive[] = {ExactRational(-1, 2), ExactRational(1, 4), ExactRational(1, 16)};
  static const ExactRational kNegative[] = {ExactRational(1, 4), ExactRational(-1, 2), ExactRational(1, 16)};
  return sign > 0 ? kPositive[gamma] : kNegative[gamma];
}

Epsilon1 epsilon1(const BaseDecomposition& dec, u64 d) {
  if (d == 0) {
    throw std::invalid_argument("epsilon1: d must be positive");
  }
  if (d % 2 != 0) {
    return {ExactRational(1), CaseLabel::kOddD, std::nullopt};
  }
  const int gamma = base::gamma_exponent(dec.disc, d, dec.h);
  const bool divides = disc_divides_4d(dec.disc, d);

  if (d % 4 == 2) {
    // 1 + 3(1 - sgn g)(2^{ν2(h)} - 1)/4
    const int two_adic_h = arith::valuation(2, static_cast<arith::i64>(dec.h));
    const ExactRational sign_term(BigInt(3) * (1 - dec.sign) * ((BigInt(1) << two_adic_h) - 1), BigInt(4));
    ExactRational value = ExactRational(1) + sign_term;
    if (!divides) {
      return {value, CaseLabel::kSingleTwoNoDisc, gamma};
    }
    value += epsilon_table(dec.sign, gamma);
    return {value, CaseLabel::kSingleTwoDisc, gamma};
  }

  if (!divides) {
    return {ExactRational(1), CaseLabel::kFourNoDisc, gamma};
  }
  return {ExactRational(1) + epsilon_table(+1, gamma), CaseLabel::kFourDisc, gamma};
}

ExactRational epsilon1_positive(const BaseDecomposition& dec, u64 d) {
  if (dec.sign < 0) {
    throw std::invalid_argument("epsilon1_positive: g must be positive");
  }
  if (d % 2 == 0 && disc_divides_4d(dec.disc, d)) {
    return ExactRational(1) + minus_half_tower(base::gamma_exponent(dec.disc, d, dec.h));
  }
  return ExactRational(1);
}

ExactRational epsilon1_odd_h(const BaseDecomposition& dec, u64 d) {
  if (dec.h % 2 == 0) {
    throw std::invalid_argument("epsilon1_odd_h: h must be odd");
  }
  const arith::i64 disc_g = base::quadratic_discriminant(dec.base.num(), static_cast<u64>(dec.base.den()));
  if (d % 2 == 0 && disc_divides_4d(disc_g, d)) {
    return ExactRational(1) + minus_half_tower(base::gamma_exponent(disc_g, d, dec.h));
  }
  return ExactRational(1);
}

DensityReport density(const RationalBase& g, u64 d) {
  if (d == 0) {
    throw std::invalid_argument("density: d must be positive");
  }
  const auto decomposition = base::decompose(g);
  const auto s = s_factor(d, decomposition.h);
  auto eps = epsilon1(decomposition, d);
  ExactRational delta = eps.value * s;
  DensityReport report{decomposition, d, s, std::move(eps.value), eps.gamma, eps.label, std::move(delta)};
  return report;
}

ExactRational density_by_transfer(const RationalBase& g, u64 d) {
  if (g.sign() > 0) {
    throw std::invalid_argument("density_by_transfer: g must be negative");
  }
  if (d == 0) {
    throw std::invalid_argument("density_by_transfer: d must be positive");
  }
  const RationalBase positive = g.absolute();
  if (d % 4 == 2) {
    return density(positive, d / 2).delta + density(positive, 2 * d).delta - density(positive, d).delta;
  }
  return density(positive, d).delta;
}

}  // namespace orddiv::density
