#pragma once

#include <span>
#include <string_view>

#include "orddiv/base.hpp"
#include "orddiv/rational.hpp"

namespace orddiv::tools {

/// A published row of the g > 0 (table 2) or g < 0 (table 3) density tables,
/// kept exactly as printed. `delta` is the corrected exact density where the
/// printed cell is a misprint; otherwise it equals `printed_delta`.
struct ReferenceRow {
  int table = 2;
  base::RationalBase g;
  arith::u64 printed_g0 = 0;
  arith::u64 h = 1;
  arith::i64 disc = 0;
  arith::u64 d = 1;
  ExactRational epsilon1;
  ExactRational printed_delta;
  ExactRational delta;
  std::string_view numerical;     // 8 digits, truncated
  std::string_view experimental;  // census ratio at x = 2038074743
  std::string_view note;          // non-empty for misprinted rows
};

/// Rows of table 2 or 3; throws std::invalid_argument for other numbers.
std::span<const ReferenceRow> reference_rows(int table);

/// Both tables, table 2 first.
std::span<const ReferenceRow> all_reference_rows();

}  // namespace orddiv::tools
