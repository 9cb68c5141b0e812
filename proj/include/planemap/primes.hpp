#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "planemap/rng.hpp"

namespace planemap {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the base set is exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Default screening window [2^30, 2^31); large enough that every degree in
/// play is far below the characteristic. Overridable through the environment
/// (PLANEMAP_PRIME_MIN / PLANEMAP_PRIME_MAX, half-open).
inline std::uint64_t default_prime_min() {
  if (const char* s = std::getenv("PLANEMAP_PRIME_MIN")) {
    return std::strtoull(s, nullptr, 10);
  }
  return std::uint64_t{1} << 30;
}

inline std::uint64_t default_prime_max() {
  if (const char* s = std::getenv("PLANEMAP_PRIME_MAX")) {
    return std::strtoull(s, nullptr, 10);
  }
  return std::uint64_t{1} << 31;
}

/// Uniform prime in [lo, hi), by rejection.
inline std::uint64_t random_prime(Rng& rng, std::uint64_t lo,
                                  std::uint64_t hi) {
  if (lo >= hi) throw std::invalid_argument("random_prime: empty window");
  for (int tries = 0; tries < 1 << 20; ++tries) {
    std::uint64_t c = rng.range(lo, hi - 1);
    c |= 1;
    if (c >= lo && c < hi && is_prime_u64(c)) return c;
  }
  throw std::runtime_error("random_prime: window contains no prime?");
}

inline std::uint64_t random_prime(Rng& rng) {
  return random_prime(rng, default_prime_min(), default_prime_max());
}

}  // namespace planemap
