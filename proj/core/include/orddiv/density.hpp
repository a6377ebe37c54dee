#pragma once

#include <optional>
#include <string_view>

#include "orddiv/base.hpp"
#include "orddiv/rational.hpp"

namespace orddiv::density {

using arith::u64;
using base::BaseDecomposition;
using base::RationalBase;

/// Which branch of the closed form applies, keyed on ν2(d) and D(g0) | 4d.
enum class CaseLabel {
  kOddD,
  kSingleTwoNoDisc,  // 2 || d, D(g0) does not divide 4d
  kSingleTwoDisc,    // 2 || d, D(g0) | 4d
  kFourNoDisc,       // 4 | d, D(g0) does not divide 4d
  kFourDisc,         // 4 | d, D(g0) | 4d
};

/// "odd-d", "2||d-no-disc", "2||d-disc", "4|d-no-disc", "4|d-disc".
std::string_view to_string(CaseLabel label);

struct Epsilon1 {
  ExactRational value;
  CaseLabel label = CaseLabel::kOddD;
  std::optional<int> gamma;  // set whenever d is even
};

struct DensityReport {
  BaseDecomposition decomposition;
  u64 d = 1;
  ExactRational s_factor;
  ExactRational epsilon1;
  std::optional<int> gamma;
  CaseLabel case_label = CaseLabel::kOddD;
  ExactRational delta;
};

/// S(d,h) = 1/(d (h,d^∞)) ∏_{p|d} p²/(p²-1).
ExactRational s_factor(u64 d, u64 h);

/// Correction ε_g(d) by sign of g and γ ∈ {0, 1, 2}.
ExactRational epsilon_table(int sign, int gamma);

Epsilon1 epsilon1(const BaseDecomposition& decomposition, u64 d);

/// The g > 0 form: 1 + (-1/2)^(2^γ) when 2 | d and D(g0) | 4d, else 1.
/// Throws for negative g.
ExactRational epsilon1_positive(const BaseDecomposition& decomposition, u64 d);

/// The odd-h form, which uses D(g) (the discriminant of Q(sqrt(g)), negative
/// for g < 0) in place of D(g0). Throws for even h.
ExactRational epsilon1_odd_h(const BaseDecomposition& decomposition, u64 d);

/// δ_g(d) = ε1 · S(d,h).
DensityReport density(const RationalBase& g, u64 d);

/// δ_g(d) for g < 0 evaluated only from closed-form densities of |g|:
/// δ_{|g|}(d/2) + δ_{|g|}(2d) - δ_{|g|}(d) when d ≡ 2 (mod 4), else δ_{|g|}(d).
ExactRational density_by_transfer(const RationalBase& g, u64 d);

}  // namespace orddiv::density
