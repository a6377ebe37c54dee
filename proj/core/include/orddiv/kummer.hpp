#pragma once

#include <vector>

#include "orddiv/base.hpp"
#include "orddiv/rational.hpp"

namespace orddiv::kummer {

using arith::i64;
using arith::u64;
using base::BaseDecomposition;
using base::RationalBase;

/// Correction data for [Q(ζ_{kr}, g^{1/k}) : Q] = φ(kr) k / (ε(kr,k) (k,h)).
///
/// m and n_r are taken with |D(g0)|; n_r depends only on ν2(r) and the
/// sign of g.
class DegreeParams {
 public:
  explicit DegreeParams(const BaseDecomposition& decomposition);

  const BaseDecomposition& decomposition() const { return dec_; }
  u64 m() const { return m_; }

  /// n_r for the given r >= 1.
  u64 n_for(u64 r) const;

  /// ε(kr, k) ∈ {1/2, 1, 2}; requires k | kr.
  ExactRational epsilon(u64 kr, u64 k) const;

  /// [K_{kr,k} : Q]; requires k | kr.
  u64 degree(u64 kr, u64 k) const;

 private:
  BaseDecomposition dec_;
  u64 disc_abs_;
  int two_adic_h_;
  u64 m_;
};

u64 degree(u64 kr, u64 k, const BaseDecomposition& decomposition);

struct SeriesBlock {
  u64 v = 1;
  ExactRational value;
};

/// Partial sum of Σ_{v | d^∞} Σ_{α | d} μ(α)/[K_{dv,αv} : Q] over v <= vmax,
/// with a bound on the omitted tail. partial <= δ <= partial + tail_bound.
struct SeriesEstimate {
  u64 d = 1;
  u64 vmax = 1;
  ExactRational partial;
  ExactRational tail_bound;
  std::vector<SeriesBlock> blocks;

  ExactRational upper() const { return partial + tail_bound; }
  bool brackets(const ExactRational& value) const { return partial <= value && value <= upper(); }
};

/// Σ_{α | d} μ(α)/[K_{dv,αv} : Q].
ExactRational series_block(const DegreeParams& params, u64 d, u64 v);

SeriesEstimate series_partial(const RationalBase& g, u64 d, u64 vmax);

/// Rigorous bound on the tail Σ_{v | d^∞, v > vmax} block(v).
///
/// Each block is at most 1/[K_{dv,v}:Q] <= 2h/(φ(d) v²), and for v > vmax,
/// 1/v² < 1/(v · vmax). The remaining Σ_{v>vmax} 1/v is evaluated exactly
/// as ∏_{p|d} p/(p-1) minus the enumerated head, so the bound halves (at
/// least) whenever vmax doubles.
ExactRational tail_bound(const RationalBase& g, u64 d, u64 vmax);

/// Σ_{v | d^∞, v > vmax} 1/v² <= (1/vmax) Σ_{v | d^∞, v > vmax} 1/v.
ExactRational inverse_square_tail_bound(u64 d, u64 vmax);

/// S(d,h).
ExactRational closed_sum_s1(u64 d, u64 h);

/// Sum restricted to ν2(v) >= ν2(h) + k. For even d this is 4^{-k} S(d,h).
/// For odd d every v is odd, so the restriction keeps everything when
/// ν2(h) + k = 0 and nothing otherwise.
ExactRational closed_sum_s2(u64 d, u64 h, u64 k);

/// ε2(D) = (-1/2)^(2^γ) with γ = max{0, ν2(D/dh)} when 2 | d and D | 4d; else 0.
ExactRational epsilon2(u64 d, u64 h, i64 disc);

/// ε2(D) S(d,h). Throws for a non-fundamental D.
ExactRational closed_sum_s3(u64 d, u64 h, i64 disc);

/// The literal double sums over v | d^∞, v <= vmax and squarefree α | d of
/// μ(α)(αv,h)/(φ(dv) αv), with the S2/S3 restrictions applied.
ExactRational truncated_sum_s1(u64 d, u64 h, u64 vmax);
ExactRational truncated_sum_s2(u64 d, u64 h, u64 k, u64 vmax);
ExactRational truncated_sum_s3(u64 d, u64 h, i64 disc, u64 vmax);

/// Bound on |full sum - truncated sum| valid for all three variants:
/// 2^{ω(d)} h/φ(d) · inverse_square_tail_bound(d, vmax).
ExactRational truncated_sum_tail_bound(u64 d, u64 h, u64 vmax);

}  // namespace orddiv::kummer
