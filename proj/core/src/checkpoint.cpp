#include "orddiv/checkpoint.hpp"

#include <iterator>

#include <json.hpp>

namespace orddiv::census {

using nlohmann::json;

std::string to_json_line(const CheckpointRecord& record) {
  json j = {
      {"segment_start", record.tally.segment_start},
      {"segment_end", record.tally.segment_end},
      {"counted", record.tally.counted},
      {"considered", record.tally.considered},
      {"config_fingerprint", record.fingerprint},
  };
  return j.dump();
}

CheckpointRecord parse_checkpoint_line(std::string_view line) {
  try {
    const json j = json::parse(line);
    CheckpointRecord record;
    record.tally.segment_start = j.at("segment_start").get<u64>();
    record.tally.segment_end = j.at("segment_end").get<u64>();
    record.tally.counted = j.at("counted").get<u64>();
    record.tally.considered = j.at("considered").get<u64>();
    record.fingerprint = j.at("config_fingerprint").get<std::string>();
    if (record.tally.counted > record.tally.considered || record.tally.segment_end < record.tally.segment_start) {
      throw CheckpointError("inconsistent checkpoint record: " + std::string(line));
    }
    return record;
  } catch (const json::exception& e) {
    throw CheckpointError("malformed checkpoint record '" + std::string(line) + "': " + e.what());
  }
}

std::vector<CheckpointRecord> read_checkpoint(const std::filesystem::path& path) {
  std::vector<CheckpointRecord> out;
  std::ifstream in(path);
  if (!in) {
    if (std::filesystem::exists(path)) {
      throw CheckpointError("cannot open checkpoint " + path.string());
    }
    return out;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    if (in.eof()) {
      // No trailing newline: the writer was interrupted mid-record.
      break;
    }
    try {
      out.push_back(parse_checkpoint_line(line));
    } catch (const CheckpointError& e) {
      throw CheckpointError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

namespace {

// Cut an unterminated final record so appends start on a fresh line.
void drop_torn_tail(const std::filesystem::path& path) {
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (ec || size == 0) {
    return;
  }
  std::ifstream in(path, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.back() == '\n') {
    return;
  }
  const auto last = content.rfind('\n');
  std::filesystem::resize_file(path, last == std::string::npos ? 0 : last + 1);
}

}  // namespace

CheckpointWriter::CheckpointWriter(const std::filesystem::path& path) : path_(path) {
  drop_torn_tail(path);
  out_.open(path, std::ios::app);
  if (!out_) {
    throw CheckpointError("cannot open checkpoint " + path.string() + " for writing");
  }
}

void CheckpointWriter::append(const CheckpointRecord& record) {
  std::lock_guard lock(mutex_);
  out_ << to_json_line(record) << '\n';
  out_.flush();
  if (!out_) {
    throw CheckpointError("write to checkpoint " + path_.string() + " failed");
  }
}

}  // namespace orddiv::census
