#pragma once

#include <string>
#include <string_view>

#include "orddiv/base.hpp"
#include "orddiv/census.hpp"
#include "orddiv/rational.hpp"

namespace orddiv::census {

/// One exported census line: counts at x against the exact density.
struct CensusSummary {
  RationalBase g;
  u64 d = 1;
  u64 x = 3;
  u64 counted = 0;
  u64 considered = 0;
  ExactRational delta_exact;

  ExactRational ratio() const;
  ExactRational abs_error() const { return (ratio() - delta_exact).abs(); }

  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

CensusSummary summarize(const CensusConfig& config, const CensusResult& result, const ExactRational& delta);

/// "g,d,x,counted,considered,ratio,delta_exact,abs_error"
std::string csv_header();

/// ratio and abs_error use 8 decimals, rounded half to even; delta_exact is a fraction.
std::string to_csv_row(const CensusSummary& summary);
CensusSummary parse_csv_row(std::string_view row);

/// Object with the CSV fields plus the exact ratio as a fraction.
std::string to_json(const CensusSummary& summary);
CensusSummary summary_from_json(std::string_view text);

}  // namespace orddiv::census
