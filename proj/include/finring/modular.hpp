#pragma once

// Residue arithmetic modulo a runtime modulus n < 2^31.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace finring {

using Residue = std::uint32_t;
using Index = std::uint64_t;

inline constexpr Residue kMaxModulus = (Residue{1} << 31) - 1;

constexpr Residue mod_reduce(std::int64_t x, Residue n) {
  const std::int64_t r = x % static_cast<std::int64_t>(n);
  return static_cast<Residue>(r < 0 ? r + n : r);
}

constexpr Residue mod_add(Residue a, Residue b, Residue n) {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= n ? s - n : s);
}

constexpr Residue mod_sub(Residue a, Residue b, Residue n) {
  return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + n - b);
}

constexpr Residue mod_neg(Residue a, Residue n) { return a == 0 ? 0 : n - a; }

constexpr Residue mod_mul(Residue a, Residue b, Residue n) {
  return static_cast<Residue>(std::uint64_t{a} * b % n);
}

struct Xgcd {
  std::int64_t g;
  std::int64_t s;
  std::int64_t t;
};

/// Extended Euclid on non-negative inputs: g = s*a + t*b, g = gcd(a, b).
constexpr Xgcd xgcd(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return {r0, s0, t0};
}

constexpr std::optional<Residue> mod_inverse(Residue a, Residue n) {
  if (n == 1) return Residue{0};
  const auto [g, s, t] = xgcd(a % n, n);
  (void)t;
  if (g != 1) return std::nullopt;
  return mod_reduce(s, n);
}

constexpr bool is_unit(Residue a, Residue n) { return std::gcd(a % n, n) == 1; }

/// A unit u of Z_n with u*a = gcd(a, n) (mod n).
constexpr Residue unit_normalizer(Residue a, Residue n) {
  const Residue g = std::gcd(a % n, n);
  if (g == 0 || a % n == 0) return 1;
  const Residue reduced_n = n / g;
  const Residue base = reduced_n == 1 ? 0 : *mod_inverse((a / g) % reduced_n, reduced_n);
  // lift base (mod n/g) to a unit mod n
  for (std::uint64_t u = base; u < n + std::uint64_t{base}; u += reduced_n) {
    if (std::gcd(static_cast<Residue>(u % n), n) == 1) return static_cast<Residue>(u % n);
  }
  throw std::logic_error("unit_normalizer: no unit lift");
}

/// Additive order of a in Z_n.
constexpr Residue additive_order(Residue a, Residue n) { return n / std::gcd(a % n, n); }

}  // namespace finring
