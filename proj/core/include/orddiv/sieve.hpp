#pragma once

#include <cstdint>
#include <vector>

namespace orddiv::census {

/// Odd-only segmented sieve of Eratosthenes over [1, limit].
class SegmentedSieve {
 public:
  explicit SegmentedSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  /// Calls fn(p) for every odd prime p in [lo, hi] (clamped to limit),
  /// ascending. Safe to call concurrently from several threads.
  template <typename Fn>
  void for_each_odd_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
    std::vector<std::uint8_t> composite;
    const auto [first, count] = mark(lo, hi, composite);
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!composite[i]) {
        fn(first + 2 * i);
      }
    }
  }

 private:
  struct Window {
    std::uint64_t first;  // smallest odd number >= max(lo, 3)
    std::uint64_t count;  // odd numbers in the window
  };
  Window mark(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint8_t>& composite) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> base_primes_;  // odd primes up to sqrt(limit)
};

/// Smallest-prime-factor table on [0, limit] for fast factorization of p - 1.
class SmallestFactorTable {
 public:
  explicit SmallestFactorTable(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace orddiv::census
