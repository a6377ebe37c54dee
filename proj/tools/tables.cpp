#include "tables.hpp"

#include <stdexcept>
#include <vector>

namespace orddiv::tools {
namespace {

ExactRational q(std::string_view text) { return ExactRational::parse(text); }

ReferenceRow row(int table, arith::i64 g, arith::u64 g0, arith::u64 h, arith::i64 disc, arith::u64 d,
                 std::string_view eps, std::string_view delta, std::string_view numerical,
                 std::string_view experimental) {
  return {table, base::RationalBase(g), g0, h, disc, d, q(eps), q(delta), q(delta), numerical, experimental, {}};
}

const std::vector<ReferenceRow>& rows() {
  static const std::vector<ReferenceRow> all = [] {
    std::vector<ReferenceRow> out = {
        row(2, 2, 2, 1, 8, 2, "17/16", "17/24", "0.70833333", "0.70831919"),
        row(2, 2, 2, 1, 8, 4, "5/4", "5/12", "0.41666666", "0.41667021"),
        row(2, 2, 2, 1, 8, 8, "1/2", "1/12", "0.08333333", "0.08333144"),
        row(2, 3, 3, 1, 12, 11, "1", "11/120", "0.09166666", "0.09165950"),
        row(2, 3, 3, 1, 12, 12, "1/2", "1/16", "0.06250000", "0.06249098"),
        row(2, 4, 2, 2, 8, 5, "1", "5/24", "0.20833333", "0.20833328"),
        row(2, 4, 2, 2, 8, 6, "5/4", "5/32", "0.15625000", "0.15625824"),
        row(3, -2, 3, 1, 8, 2, "17/16", "17/24", "0.70833333", "0.70835101"),
        row(3, -2, 2, 1, 8, 4, "5/4", "5/12", "0.41666666", "0.41667021"),
        row(3, -2, 2, 1, 8, 6, "17/16", "17/64", "0.26562500", "0.26562628"),
        row(3, -3, 3, 1, 12, 5, "1", "5/24", "0.20833333", "0.20834107"),
        row(3, -3, 3, 1, 12, 12, "1/2", "1/16", "0.06250000", "0.06249098"),
        row(3, -4, 2, 2, 8, 2, "2", "2/3", "0.66666666", "0.66666122"),
        row(3, -4, 2, 2, 8, 4, "1/2", "1/8", "0.08333333", "0.08333144"),
        row(3, -9, 3, 2, 12, 2, "5/2", "5/6", "0.83333333", "0.83333215"),
        row(3, -9, 3, 2, 12, 6, "11/4", "11/32", "0.34375000", "0.34375638"),
    };
    // g = -2 forces g0 = 2; the printed D(g0) = 8 agrees with g0 = 2.
    out[7].note = "printed g0 = 3 is a misprint; g = -2 = -(2^1) gives g0 = 2";
    // ε1 · S(4,2) = (1/2)(1/6) = 1/12, matching the printed decimal 0.08333333.
    out[13].delta = q("1/12");
    out[13].note = "printed delta = 1/8 is a misprint; epsilon1 * S(d,h) = 1/12 = 0.08333333";
    return out;
  }();
  return all;
}

}  // namespace

std::span<const ReferenceRow> reference_rows(int table) {
  const auto& all = rows();
  if (table == 2) {
    return std::span(all).subspan(0, 7);
  }
  if (table == 3) {
    return std::span(all).subspan(7);
  }
  throw std::invalid_argument("table must be 2 or 3");
}

std::span<const ReferenceRow> all_reference_rows() { return rows(); }

}  // namespace orddiv::tools
