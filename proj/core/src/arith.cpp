#include "orddiv/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orddiv::arith {
namespace {

constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_below(kTrialDivisionLimit);
  return primes;
}

__extension__ typedef unsigned __int128 u128;

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

// Pollard rho with Brent's cycle detection. n must be odd, composite and
// free of factors below kTrialDivisionLimit. Seeds are fixed so output is
// reproducible.
u64 pollard_brent(u64 n) {
  for (u64 increment = 1;; ++increment) {
    auto step = [&](u64 x) { return (mulmod(x, x, n) + increment) % n; };
    u64 y = 2;
    u64 x = 2;
    u64 ys = 2;
    u64 g = 1;
    u64 q = 1;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) {
        y = step(y);
      }
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        const u64 limit = std::min(kBatch, r - k);
        for (u64 i = 0; i < limit; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += kBatch;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batched product collapsed; replay one step at a time.
      do {
        ys = step(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) {
      return g;
    }
  }
}

void collect_large(u64 n, std::vector<PrimePower>& out) {
  if (n == 1) {
    return;
  }
  if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  const u64 divisor = pollard_brent(n);
  collect_large(divisor, out);
  collect_large(n / divisor, out);
}

}  // namespace

Factorization::Factorization(u64 value, std::vector<PrimePower> factors)
    : value_(value), factors_(std::move(factors)) {
  if (value_ == 0) {
    throw std::invalid_argument("Factorization: value must be positive");
  }
  u64 product = 1;
  u64 previous = 0;
  for (const auto& [prime, exponent] : factors_) {
    if (prime <= previous || exponent <= 0 || !is_prime(prime)) {
      throw std::invalid_argument("Factorization: factors must be ascending primes with positive exponents");
    }
    for (int i = 0; i < exponent; ++i) {
      product = checked_mul(product, prime);
    }
    previous = prime;
  }
  if (product != value_) {
    throw std::invalid_argument("Factorization: product of factors differs from value");
  }
}

Factorization Factorization::from_trusted(u64 value, std::vector<PrimePower> factors) {
  Factorization out;
  out.value_ = value;
  out.factors_ = std::move(factors);
  return out;
}

int Factorization::exponent_of(u64 prime) const {
  for (const auto& f : factors_) {
    if (f.prime == prime) {
      return f.exponent;
    }
  }
  return 0;
}

std::vector<u64> Factorization::primes() const {
  std::vector<u64> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) {
    out.push_back(f.prime);
  }
  return out;
}

u64 mulmod(u64 a, u64 b, u64 modulus) {
  if (modulus <= UINT32_MAX) {
    return (a % modulus) * (b % modulus) % modulus;
  }
  return static_cast<u64>(static_cast<u128>(a) * b % modulus);
}

u64 powmod(u64 base, u64 exponent, u64 modulus) {
  if (modulus == 1) {
    return 0;
  }
  u64 result = 1;
  base %= modulus;
  if (modulus <= UINT32_MAX) {
    while (exponent > 0) {
      if (exponent & 1) result = result * base % modulus;
      base = base * base % modulus;
      exponent >>= 1;
    }
    return result;
  }
  while (exponent > 0) {
    if (exponent & 1) result = mulmod(result, base, modulus);
    base = mulmod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) {
    return false;
  }
  static constexpr std::array<u64, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kSmall) {
    if (n % p == 0) {
      return n == p;
    }
  }
  u64 odd = n - 1;
  int twos = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++twos;
  }
  // The first twelve primes form a deterministic witness set below 3.18e23.
  for (u64 a : kSmall) {
    u64 x = powmod(a, odd, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (int i = 1; i < twos; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) {
    throw std::invalid_argument("factorize: n must be positive");
  }
  std::vector<PrimePower> factors;
  u64 rest = n;
  for (std::uint32_t p : trial_primes()) {
    if (static_cast<u64>(p) * p > rest) {
      break;
    }
    if (rest % p != 0) {
      continue;
    }
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  if (rest > 1) {
    std::vector<PrimePower> large;
    collect_large(rest, large);
    std::sort(large.begin(), large.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
    for (const auto& f : large) {
      if (!factors.empty() && factors.back().prime == f.prime) {
        factors.back().exponent += f.exponent;
      } else {
        factors.push_back(f);
      }
    }
  }
  return Factorization::from_trusted(n, std::move(factors));
}

Factorization merge(const Factorization& lhs, const Factorization& rhs) {
  std::vector<PrimePower> out;
  auto a = lhs.factors();
  auto b = rhs.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].prime < b[j].prime)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].prime < a[i].prime) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].prime, a[i].exponent + b[j].exponent});
      ++i;
      ++j;
    }
  }
  return Factorization::from_trusted(checked_mul(lhs.value(), rhs.value()), std::move(out));
}

int mobius(u64 n) {
  if (n == 0) {
    throw std::invalid_argument("mobius: n must be positive");
  }
  const auto f = factorize(n);
  for (const auto& pp : f.factors()) {
    if (pp.exponent > 1) {
      return 0;
    }
  }
  return (f.omega() % 2 == 0) ? 1 : -1;
}

u64 euler_phi(u64 n) {
  if (n == 0) {
    throw std::invalid_argument("euler_phi: n must be positive");
  }
  u64 result = n;
  for (const auto& pp : factorize(n).factors()) {
    result = result / pp.prime * (pp.prime - 1);
  }
  return result;
}

int valuation(u64 p, i64 n) {
  if (n == 0) {
    throw std::invalid_argument("valuation: n must be nonzero");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("valuation: p must be prime");
  }
  // Avoid negating INT64_MIN.
  u64 m = n < 0 ? u64(0) - static_cast<u64>(n) : static_cast<u64>(n);
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

int valuation(u64 p, const ExactRational& n) {
  if (n.is_zero()) {
    throw std::invalid_argument("valuation: n must be nonzero");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("valuation: p must be prime");
  }
  auto count = [p](BigInt m) {
    if (m.sign() < 0) m = -m;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    return e;
  };
  return count(n.numerator()) - count(n.denominator());
}

u64 gcd_with_dinfty(u64 h, u64 d) {
  if (h == 0 || d == 0) {
    throw std::invalid_argument("gcd_with_dinfty: arguments must be positive");
  }
  u64 out = 1;
  for (const auto& pp : factorize(d).factors()) {
    u64 rest = h;
    while (rest % pp.prime == 0) {
      rest /= pp.prime;
      out *= pp.prime;
    }
  }
  return out;
}

std::vector<u64> divisors_of_dinfty(u64 d, u64 bound) {
  if (d == 0 || bound == 0) {
    throw std::invalid_argument("divisors_of_dinfty: arguments must be positive");
  }
  std::vector<u64> out{1};
  for (const auto& pp : factorize(d).factors()) {
    const std::size_t existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      u64 v = out[i];
      while (v <= bound / pp.prime) {
        v *= pp.prime;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedDivisor> squarefree_divisors(u64 d) {
  if (d == 0) {
    throw std::invalid_argument("squarefree_divisors: d must be positive");
  }
  std::vector<SignedDivisor> out{{1, 1}};
  for (const auto& pp : factorize(d).factors()) {
    const std::size_t existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      out.push_back({out[i].divisor * pp.prime, -out[i].mu});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.divisor < b.divisor; });
  return out;
}

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit <= 2) {
    return out;
  }
  std::vector<bool> composite(limit, false);
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j < limit; j += i) {
      composite[j] = true;
    }
  }
  return out;
}

u64 checked_mul(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

}  // namespace orddiv::arith
