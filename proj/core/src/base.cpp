#include "orddiv/base.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace orddiv::base {
namespace {

u64 magnitude(i64 v) { return v < 0 ? u64(0) - static_cast<u64>(v) : static_cast<u64>(v); }

i64 parse_i64(std::string_view text, std::string_view whole) {
  i64 value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("cannot parse rational '" + std::string(whole) + "'");
  }
  return value;
}

// Squarefree kernel of a * b from both factorizations: primes of odd total exponent.
u64 squarefree_kernel(u64 a, u64 b) {
  const auto f = arith::merge(arith::factorize(a), arith::factorize(b));
  u64 kernel = 1;
  for (const auto& pp : f.factors()) {
    if (pp.exponent % 2 != 0) {
      kernel = arith::checked_mul(kernel, pp.prime);
    }
  }
  return kernel;
}

i64 discriminant_from_kernel(i64 kernel) {
  // kernel mod 4 for negative numbers: -3 ≡ 1, -1 ≡ 3, -2 ≡ 2.
  const i64 residue = ((kernel % 4) + 4) % 4;
  if (residue == 1) {
    return kernel;
  }
  if (kernel > INT64_MAX / 4 || kernel < INT64_MIN / 4) {
    throw std::overflow_error("discriminant exceeds 64 bits");
  }
  return 4 * kernel;
}

}  // namespace

RationalBase::RationalBase(i64 num, i64 den) : num_(num), den_(den) {
  if (den_ == 0) {
    throw std::invalid_argument("g has zero denominator");
  }
  if (num_ == INT64_MIN || den_ == INT64_MIN) {
    throw std::invalid_argument("g is outside the supported 64-bit range");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const i64 g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0 || (den_ == 1 && (num_ == 1 || num_ == -1))) {
    throw std::invalid_argument("g must not be -1, 0 or 1 (orders are undefined or trivial)");
  }
}

RationalBase RationalBase::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return RationalBase(parse_i64(text, text), 1);
  }
  return RationalBase(parse_i64(text.substr(0, slash), text), parse_i64(text.substr(slash + 1), text));
}

std::string RationalBase::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool RationalBase::involves_prime(u64 p) const {
  return magnitude(num_) % p == 0 || static_cast<u64>(den_) % p == 0;
}

BaseDecomposition decompose(const RationalBase& base) {
  const auto num_f = arith::factorize(magnitude(base.num()));
  const auto den_f = arith::factorize(static_cast<u64>(base.den()));

  u64 h = 0;
  for (const auto& pp : num_f.factors()) h = std::gcd(h, static_cast<u64>(pp.exponent));
  for (const auto& pp : den_f.factors()) h = std::gcd(h, static_cast<u64>(pp.exponent));
  // |g| != 1 guarantees a nonzero exponent somewhere.

  auto root = [h](const arith::Factorization& f) {
    u64 out = 1;
    for (const auto& pp : f.factors()) {
      for (u64 i = 0; i < static_cast<u64>(pp.exponent) / h; ++i) {
        out *= pp.prime;
      }
    }
    return out;
  };

  BaseDecomposition out{base, base.sign(), root(num_f), root(den_f), h, 1};
  out.disc = discriminant_of_sqrt(out.g0_num, out.g0_den);
  return out;
}

i64 discriminant_of_sqrt(u64 g0_num, u64 g0_den) {
  if (g0_num == 0 || g0_den == 0) {
    throw std::invalid_argument("discriminant_of_sqrt: arguments must be positive");
  }
  if (std::gcd(g0_num, g0_den) != 1) {
    throw std::invalid_argument("discriminant_of_sqrt: fraction must be reduced");
  }
  const u64 kernel = squarefree_kernel(g0_num, g0_den);
  if (kernel == 1) {
    throw std::invalid_argument("discriminant_of_sqrt: perfect square has no quadratic field");
  }
  if (kernel > static_cast<u64>(INT64_MAX)) {
    throw std::overflow_error("discriminant exceeds 64 bits");
  }
  return discriminant_from_kernel(static_cast<i64>(kernel));
}

i64 quadratic_discriminant(i64 num, u64 den) {
  if (num == 0 || den == 0) {
    throw std::invalid_argument("quadratic_discriminant: arguments must be nonzero");
  }
  const u64 kernel = squarefree_kernel(magnitude(num), den);
  if (num > 0 && kernel == 1) {
    throw std::invalid_argument("quadratic_discriminant: perfect square has no quadratic field");
  }
  if (kernel > static_cast<u64>(INT64_MAX)) {
    throw std::overflow_error("discriminant exceeds 64 bits");
  }
  const i64 signed_kernel = num < 0 ? -static_cast<i64>(kernel) : static_cast<i64>(kernel);
  return discriminant_from_kernel(signed_kernel);
}

bool is_fundamental_discriminant(i64 disc) {
  if (disc == 0 || disc == 1 || disc == INT64_MIN) {
    return false;
  }
  const u64 m = magnitude(disc);
  auto squarefree = [](u64 n) {
    for (const auto& pp : arith::factorize(n).factors()) {
      if (pp.exponent > 1) return false;
    }
    return true;
  };
  const i64 residue = ((disc % 4) + 4) % 4;
  if (residue == 1) {
    return squarefree(m);
  }
  if (residue != 0) {
    return false;
  }
  const i64 quarter = disc / 4;
  const i64 quarter_residue = ((quarter % 4) + 4) % 4;
  return (quarter_residue == 2 || quarter_residue == 3) && squarefree(magnitude(quarter));
}

int gamma_exponent(i64 disc, u64 d, u64 h) {
  if (d == 0 || h == 0 || disc == 0) {
    throw std::invalid_argument("gamma_exponent: arguments must be nonzero");
  }
  if (d % 2 != 0) {
    throw std::invalid_argument("gamma_exponent: d must be even");
  }
  const int gamma = arith::valuation(2, disc) - arith::valuation(2, static_cast<i64>(d)) -
                    arith::valuation(2, static_cast<i64>(h));
  return gamma > 0 ? gamma : 0;
}

}  // namespace orddiv::base
