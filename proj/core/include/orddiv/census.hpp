#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "orddiv/base.hpp"
#include "orddiv/rational.hpp"

namespace orddiv::census {

using arith::u64;
using base::RationalBase;

struct CensusConfig {
  RationalBase g;
  u64 d = 1;
  u64 x_limit = 3;  // inclusive prime bound
  u64 segment_size = 1'000'000;
  unsigned worker_count = 1;
  std::optional<std::filesystem::path> checkpoint_path;

  /// Throws std::invalid_argument unless d >= 1, x_limit >= 3,
  /// segment_size >= 10^4 and worker_count >= 1.
  void validate() const;

  /// Canonical "g1/g2|d|segment_size".
  std::string fingerprint() const;

  u64 segment_count() const;
  /// Inclusive bounds of segment i: [3 + i·size, min(2 + (i+1)·size, x_limit)].
  u64 segment_start(u64 index) const;
  u64 segment_end(u64 index) const;
};

/// Counts for one segment of the prime range.
struct SegmentTally {
  u64 segment_start = 0;
  u64 segment_end = 0;
  u64 counted = 0;
  u64 considered = 0;

  friend bool operator==(const SegmentTally&, const SegmentTally&) = default;
};

struct CensusResult {
  u64 counted = 0;     // #{3 <= p <= x : p ∤ g1 g2, d | ord_p(g)}
  u64 considered = 0;  // #{3 <= p <= x : p ∤ g1 g2}
  std::vector<SegmentTally> segments;
  u64 resumed_segments = 0;  // segments taken from a checkpoint

  /// counted/considered; zero when nothing was considered.
  ExactRational ratio() const;
};

/// Segmented census over [3, x_limit]. Segments run on worker_count threads;
/// totals do not depend on the thread count or segment size. With a
/// checkpoint path, each finished segment is appended to the file and
/// previously recorded segments are skipped on restart.
///
/// Throws CheckpointError if the checkpoint belongs to a different run or
/// cannot be parsed.
CensusResult run_census(const CensusConfig& config);

/// Counts a single segment; exposed for benchmarks and tests.
SegmentTally census_segment(const CensusConfig& config, u64 index);

}  // namespace orddiv::census
