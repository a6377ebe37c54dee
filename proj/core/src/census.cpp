#include "orddiv/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "orddiv/checkpoint.hpp"
#include "orddiv/order.hpp"
#include "orddiv/sieve.hpp"

namespace orddiv::census {
namespace {

constexpr u64 kMinSegmentSize = 10'000;

SegmentTally count_segment(const CensusConfig& config, const SegmentedSieve& sieve, const Factorization& d_factored,
                           u64 index) {
  SegmentTally tally{config.segment_start(index), config.segment_end(index), 0, 0};
  const u64 d = config.d;
  sieve.for_each_odd_prime(tally.segment_start, tally.segment_end, [&](u64 p) {
    if (config.g.involves_prime(p)) {
      return;
    }
    ++tally.considered;
    if ((p - 1) % d != 0) {
      return;
    }
    if (order_divisible(p, reduce_mod_p(config.g, p), d_factored)) {
      ++tally.counted;
    }
  });
  return tally;
}

std::vector<std::optional<SegmentTally>> load_completed(const CensusConfig& config) {
  std::vector<std::optional<SegmentTally>> done(config.segment_count());
  if (!config.checkpoint_path) {
    return done;
  }
  const std::string expected = config.fingerprint();
  for (const auto& record : read_checkpoint(*config.checkpoint_path)) {
    if (record.fingerprint != expected) {
      throw CheckpointError("checkpoint fingerprint mismatch: file has '" + record.fingerprint + "', run expects '" +
                            expected + "'");
    }
    const auto& t = record.tally;
    const u64 index = t.segment_start >= 3 ? (t.segment_start - 3) / config.segment_size : config.segment_count();
    const bool aligned = index < config.segment_count() && t.segment_start == config.segment_start(index);
    if (aligned && t.segment_end < config.segment_end(index)) {
      // Final short segment of an earlier run with a smaller x; recount it.
      continue;
    }
    if (!aligned || t.segment_end != config.segment_end(index)) {
      throw CheckpointError("checkpoint segment [" + std::to_string(t.segment_start) + ", " +
                            std::to_string(t.segment_end) + "] does not match this run's segmentation (x = " +
                            std::to_string(config.x_limit) + ")");
    }
    if (done[index]) {
      throw CheckpointError("checkpoint records segment starting at " + std::to_string(t.segment_start) + " twice");
    }
    done[index] = t;
  }
  return done;
}

}  // namespace

void CensusConfig::validate() const {
  if (d == 0) {
    throw std::invalid_argument("census: d must be positive");
  }
  if (x_limit < 3) {
    throw std::invalid_argument("census: x must be at least 3");
  }
  if (segment_size < kMinSegmentSize) {
    throw std::invalid_argument("census: segment size must be at least 10000");
  }
  if (worker_count == 0) {
    throw std::invalid_argument("census: worker count must be positive");
  }
}

std::string CensusConfig::fingerprint() const {
  return std::to_string(g.num()) + "/" + std::to_string(g.den()) + "|" + std::to_string(d) + "|" +
         std::to_string(segment_size);
}

u64 CensusConfig::segment_count() const { return (x_limit - 3) / segment_size + 1; }

u64 CensusConfig::segment_start(u64 index) const { return 3 + index * segment_size; }

u64 CensusConfig::segment_end(u64 index) const {
  const u64 end = segment_start(index) + segment_size - 1;
  return end < x_limit ? end : x_limit;
}

ExactRational CensusResult::ratio() const {
  if (considered == 0) {
    return ExactRational(0);
  }
  return ExactRational(BigInt(counted), BigInt(considered));
}

SegmentTally census_segment(const CensusConfig& config, u64 index) {
  config.validate();
  if (index >= config.segment_count()) {
    throw std::out_of_range("census_segment: index past the last segment");
  }
  const SegmentedSieve sieve(config.x_limit);
  return count_segment(config, sieve, arith::factorize(config.d), index);
}

CensusResult run_census(const CensusConfig& config) {
  config.validate();
  const SegmentedSieve sieve(config.x_limit);
  const Factorization d_factored = arith::factorize(config.d);

  auto done = load_completed(config);
  std::vector<u64> pending;
  for (u64 i = 0; i < done.size(); ++i) {
    if (!done[i]) pending.push_back(i);
  }
  const u64 resumed = done.size() - pending.size();

  std::optional<CheckpointWriter> writer;
  if (config.checkpoint_path) {
    writer.emplace(*config.checkpoint_path);
  }
  const std::string fingerprint = config.fingerprint();

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (std::size_t k = next++; k < pending.size(); k = next++) {
        const u64 index = pending[k];
        SegmentTally tally = count_segment(config, sieve, d_factored, index);
        if (writer) {
          writer->append({tally, fingerprint});
        }
        done[index] = tally;  // distinct slots per worker
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = pending.size();
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(config.worker_count, pending.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) {
      threads.emplace_back(work);
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }

  CensusResult result;
  result.resumed_segments = resumed;
  result.segments.reserve(done.size());
  for (const auto& tally : done) {
    result.counted += tally->counted;
    result.considered += tally->considered;
    result.segments.push_back(*tally);
  }
  return result;
}

}  // namespace orddiv::census
