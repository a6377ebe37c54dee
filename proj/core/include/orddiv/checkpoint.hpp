#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orddiv/census.hpp"

namespace orddiv::census {

/// Raised when a checkpoint is unreadable or belongs to another run.
class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One line of the checkpoint file:
/// {"segment_start":..,"segment_end":..,"counted":..,"considered":..,"config_fingerprint":".."}
struct CheckpointRecord {
  SegmentTally tally;
  std::string fingerprint;

  friend bool operator==(const CheckpointRecord&, const CheckpointRecord&) = default;
};

std::string to_json_line(const CheckpointRecord& record);
CheckpointRecord parse_checkpoint_line(std::string_view line);

/// All records in file order; a missing file yields no records.
std::vector<CheckpointRecord> read_checkpoint(const std::filesystem::path& path);

/// Appends records to a checkpoint file, one flushed line each. Thread-safe.
class CheckpointWriter {
 public:
  explicit CheckpointWriter(const std::filesystem::path& path);

  void append(const CheckpointRecord& record);

 private:
  std::mutex mutex_;
  std::ofstream out_;
  std::filesystem::path path_;
};

}  // namespace orddiv::census
