#include "orddiv/sieve.hpp"

#include <cmath>
#include <stdexcept>

#include "orddiv/arith.hpp"

namespace orddiv::census {
namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

SegmentedSieve::SegmentedSieve(std::uint64_t limit) : limit_(limit) {
  if (limit_ > (std::uint64_t(1) << 62)) {
    throw std::invalid_argument("SegmentedSieve: limit too large");
  }
  const std::uint64_t root = isqrt(limit_);
  if (root + 1 > UINT32_MAX) {
    throw std::invalid_argument("SegmentedSieve: limit too large");
  }
  for (std::uint32_t p : arith::primes_below(static_cast<std::uint32_t>(root + 1))) {
    if (p != 2) {
      base_primes_.push_back(p);
    }
  }
}

SegmentedSieve::Window SegmentedSieve::mark(std::uint64_t lo, std::uint64_t hi,
                                            std::vector<std::uint8_t>& composite) const {
  if (hi > limit_) {
    hi = limit_;
  }
  std::uint64_t first = lo < 3 ? 3 : lo;
  if (first % 2 == 0) {
    ++first;
  }
  if (first > hi) {
    composite.clear();
    return {first, 0};
  }
  const std::uint64_t count = (hi - first) / 2 + 1;
  composite.assign(count, 0);
  for (std::uint32_t p : base_primes_) {
    const std::uint64_t square = std::uint64_t(p) * p;
    if (square > hi) {
      break;
    }
    // First odd multiple of p that is >= max(first, p²).
    std::uint64_t start = square;
    if (start < first) {
      start = (first + p - 1) / p * p;
      if (start % 2 == 0) {
        start += p;
      }
    }
    for (std::uint64_t m = start; m <= hi; m += 2 * std::uint64_t(p)) {
      composite[(m - first) / 2] = 1;
    }
  }
  return {first, count};
}

SmallestFactorTable::SmallestFactorTable(std::uint32_t limit) : limit_(limit), spf_(std::size_t(limit) + 1, 0) {
  for (std::uint64_t i = 2; i <= limit_; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit_; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

}  // namespace orddiv::census
