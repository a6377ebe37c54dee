// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "orddiv/orddiv.hpp"
#include "tables.hpp"

namespace {

using namespace orddiv;
using arith::u64;
using base::RationalBase;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 = no limit
  std::function<Outcome()> run;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail.clear();
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
  o.pass = false;
}

Outcome table_fixtures() {
  Outcome o;
  int checked = 0;
  for (const auto& row : tools::all_reference_rows()) {
    const auto rep = density::density(row.g, row.d);
    std::ostringstream where;
    where << "g=" << row.g.to_string() << ",d=" << row.d;
    if (rep.epsilon1 != row.epsilon1) {
      fail(o, where.str() + ": epsilon1 " + rep.epsilon1.to_string() + " != printed " + row.epsilon1.to_string());
    }
    if (rep.delta != row.printed_delta) {
      fail(o, where.str() + ": delta " + rep.delta.to_string() + " != printed " + row.printed_delta.to_string() +
                  " (printed epsilon1*S = " + (row.epsilon1 * density::s_factor(row.d, row.h)).to_string() +
                  ", printed decimal " + std::string(row.numerical) + ")");
    }
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " rows exact";
  return o;
}

Outcome series_bracket() {
  Outcome o;
  constexpr u64 kVmax = u64(1) << 16;
  for (const auto& row : tools::all_reference_rows()) {
    const auto exact = density::density(row.g, row.d).delta;
    const auto est = kummer::series_partial(row.g, row.d, kVmax);
    std::ostringstream where;
    where << "g=" << row.g.to_string() << ",d=" << row.d;
    ExactRational running;
    for (const auto& blk : est.blocks) {
      if (blk.value.sign() < 0) fail(o, where.str() + ": negative block at v=" + std::to_string(blk.v));
      const auto next = running + blk.value;
      if (next < running) fail(o, where.str() + ": partial sums not monotone");
      running = next;
    }
    if (!est.brackets(exact)) fail(o, where.str() + ": [partial, partial + tail] misses delta");
    ExactRational previous = kummer::tail_bound(row.g, row.d, 1024);
    for (u64 v = 2048; v <= kVmax; v *= 2) {
      const auto width = kummer::tail_bound(row.g, row.d, v);
      if (width * ExactRational(2) > previous) {
        fail(o, where.str() + ": width shrank by less than 2 at vmax=" + std::to_string(v));
      }
      previous = width;
    }
  }
  if (o.pass) o.detail = "16 rows bracketed at vmax=2^16, width halves per doubling from 2^10";
  return o;
}

Outcome transfer_identity() {
  Outcome o;
  int checked = 0;
  for (long g : {2L, 3L, 5L, 6L, 7L, 10L, 12L}) {
    for (u64 d = 1; d <= 36; ++d) {
      const auto direct = density::density(RationalBase(-g), d).delta;
      ExactRational transferred = density::density(RationalBase(g), d).delta;
      if (d % 4 == 2) {
        transferred = density::density(RationalBase(g), d / 2).delta + density::density(RationalBase(g), 2 * d).delta -
                      density::density(RationalBase(g), d).delta;
      }
      if (direct != transferred) {
        fail(o, "g=" + std::to_string(g) + ",d=" + std::to_string(d) + ": " + direct.to_string() + " vs " +
                    transferred.to_string());
      }
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " pairs agree";
  return o;
}

Outcome key_identity() {
  Outcome o;
  std::ostringstream summary;
  for (const auto& [g, d] : std::vector<std::pair<RationalBase, u64>>{
           {2, 2}, {2, 4}, {2, 8}, {3, 12}, {-2, 6}, {-4, 2}, {-9, 6}}) {
    const auto r = census::verify_key_identity(g, d, 100'000);
    if (!r.holds()) {
      fail(o, "g=" + g.to_string() + ",d=" + std::to_string(d) + ": lhs " + std::to_string(r.lhs) + " rhs " +
                  std::to_string(r.rhs));
    }
    summary << " (" << g.to_string() << "," << d << "):" << r.lhs;
  }
  if (o.pass) o.detail = "lhs = rhs at x=1e5" + summary.str();
  return o;
}

Outcome order_tests() {
  Outcome o;
  u64 comparisons = 0;
  const std::vector<RationalBase> bases = {2, 3, -2, -4, RationalBase(1, 2)};
  std::vector<arith::Factorization> ds;
  for (u64 d = 1; d <= 48; ++d) ds.push_back(arith::factorize(d));
  const census::SegmentedSieve sieve(100'000);
  sieve.for_each_odd_prime(3, 100'000, [&](u64 p) {
    const auto pm1 = arith::factorize(p - 1);
    for (const auto& g : bases) {
      if (g.involves_prime(p)) continue;
      const u64 gbar = census::reduce_mod_p(g, p);
      const u64 order = census::full_order(p, gbar, pm1);
      for (u64 d = 1; d <= 48; ++d) {
        if (census::order_divisible(p, gbar, ds[d - 1]) != (order % d == 0) && o.pass) {
          fail(o, "p=" + std::to_string(p) + ",g=" + g.to_string() + ",d=" + std::to_string(d));
        }
        ++comparisons;
      }
    }
  });
  for (long g : {2L, 3L, 5L}) {
    const auto flip = census::verify_order_flip(RationalBase(g), 10'000);
    if (!flip.holds) fail(o, "order flip fails for g=" + std::to_string(g) + " at p=" + std::to_string(*flip.first_failure));
  }
  if (o.pass) o.detail = std::to_string(comparisons) + " divisibility checks, order flip for g=2,3,5";
  return o;
}

Outcome empirical_census() {
  Outcome o;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  double worst_small = 0;
  double worst_large = 0;
  for (const auto& row : tools::all_reference_rows()) {
    const auto exact = density::density(row.g, row.d).delta.to_double();
    for (const auto& [x, tol] : {std::pair<u64, double>{1'000'000, 1e-2}, {100'000'000, 2e-3}}) {
      census::CensusConfig config{row.g, row.d, x};
      config.worker_count = workers;
      const double err = std::abs(census::run_census(config).ratio().to_double() - exact);
      (x == 1'000'000 ? worst_small : worst_large) = std::max(x == 1'000'000 ? worst_small : worst_large, err);
      if (err >= tol) {
        fail(o, "g=" + row.g.to_string() + ",d=" + std::to_string(row.d) + ",x=" + std::to_string(x) +
                    ": |ratio - delta| = " + std::to_string(err));
      }
    }
  }
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "worst |ratio - delta|: %.2e at x=1e6, %.2e at x=1e8", worst_small, worst_large);
    o.detail = buf;
  }
  return o;
}

Outcome closed_sums() {
  Outcome o;
  constexpr u64 kVmax = u64(1) << 12;
  int checked = 0;
  int s2_odd_failures = 0;
  for (u64 d = 1; d <= 12; ++d) {
    for (u64 h = 1; h <= 12; ++h) {
      const auto s = density::s_factor(d, h);
      const auto bound = kummer::truncated_sum_tail_bound(d, h, kVmax);
      const auto within = [&](const ExactRational& truncated, const ExactRational& closed) {
        ++checked;
        return (truncated - closed).abs() <= bound;
      };
      const std::string where = "d=" + std::to_string(d) + ",h=" + std::to_string(h);
      if (!within(kummer::truncated_sum_s1(d, h, kVmax), s)) fail(o, "S1 " + where);
      for (u64 k = 0; k <= 2; ++k) {
        // Compared with 4^-k S(d,h) as stated, with no parity condition on d.
        const ExactRational closed = s * ExactRational(BigInt(1), BigInt(1) << (2 * k));
        if (!within(kummer::truncated_sum_s2(d, h, k, kVmax), closed)) {
          if (d % 2 == 1) {
            ++s2_odd_failures;
          } else {
            fail(o, "S2(" + std::to_string(k) + ") " + where);
          }
        }
      }
      for (long disc : {5L, 8L, 12L, 24L}) {
        if (!within(kummer::truncated_sum_s3(d, h, disc, kVmax), kummer::closed_sum_s3(d, h, disc))) {
          fail(o, "S3(" + std::to_string(disc) + ") " + where);
        }
      }
    }
  }
  if (s2_odd_failures > 0) {
    fail(o, std::to_string(s2_odd_failures) +
                " S2(k) cases with odd d differ from 4^-k S(d,h): for odd d every v is odd, so the sum is S(d,h) "
                "when nu2(h)+k = 0 and 0 otherwise; all even-d cases agree");
  }
  if (o.pass) o.detail = std::to_string(checked) + " sums within the tail bound";
  return o;
}

Outcome degenerate_guards() {
  Outcome o;
  for (const auto& row : tools::all_reference_rows()) {
    if (density::density(row.g, 1).delta != ExactRational(1)) fail(o, "delta(d=1) != 1 for g=" + row.g.to_string());
  }
  for (long g : {-1L, 0L, 1L}) {
    bool rejected = false;
    try {
      (void)RationalBase(g);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    if (!rejected) fail(o, "g=" + std::to_string(g) + " accepted");
  }
  int pairs = 0;
  for (long g : {2L, -4L}) {
    for (u64 d2 = 1; d2 <= 48; ++d2) {
      for (u64 d = 1; d <= d2; ++d) {
        if (d2 % d) continue;
        ++pairs;
        if (density::density(RationalBase(g), d2).delta > density::density(RationalBase(g), d).delta) {
          fail(o, "monotonicity g=" + std::to_string(g) + " d=" + std::to_string(d) + " d'=" + std::to_string(d2));
        }
      }
    }
  }
  if (o.pass) o.detail = "d=1 gives 1, unit bases rejected, " + std::to_string(pairs) + " divisor pairs monotone";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "table fixtures (exact)", 1, table_fixtures},
      {2, "series bracket", 10, series_bracket},
      {3, "transfer identity", 1, transfer_identity},
      {4, "prime-count identity", 30, key_identity},
      {5, "order tests", 60, order_tests},
      {6, "empirical census", 0, empirical_census},
      {7, "closed sums", 10, closed_sums},
      {8, "degenerate inputs and guards", 1, degenerate_guards},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      fail(outcome, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      fail(outcome, "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.budget_seconds) + " s");
    }
    failures += !outcome.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.title << "  [" << timing
              << "]  " << outcome.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
