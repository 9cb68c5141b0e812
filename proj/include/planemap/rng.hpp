#pragma once

#include <cassert>
#include <cstdint>

namespace planemap {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Deterministic 64-bit generator (splitmix64 chain). Output is identical on
/// every platform and compiler, which keeps certificates replayable; the
/// standard <random> distributions are implementation-defined and are
/// deliberately not used anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). n > 0. Unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    assert(n > 0);
    if ((n & (n - 1)) == 0) return next() & (n - 1);
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n) - 1;
    std::uint64_t x;
    do {
      x = next();
    } while (x > limit);
    return x % n;
  }

  /// Uniform in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    assert(lo <= hi);
    return lo + below(hi - lo + 1);
  }

  std::int64_t range_signed(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

/// Stable stream derivation: children depend only on (seed, tag), not on how
/// many numbers the parent has drawn.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag ^ 0xA5A5A5A5A5A5A5A5ull));
}

}  // namespace planemap
