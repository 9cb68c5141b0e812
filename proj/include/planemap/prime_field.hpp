#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace planemap {

/// Element of F_p, stored as the least non-negative residue. The modulus is
/// carried with the value (p < 2^32, so products fit in 64 bits). Elements of
/// different fields must never meet; asserted in debug builds.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {
    assert(p > 2);
  }

  static Fp from_int64(std::int64_t value, std::uint64_t p) {
    std::int64_t m = value % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(m), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, 0); }
  Fp operator+(const Fp& o) const {
    assert(p_ == o.p_);
    std::uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return Fp(s, p_, 0);
  }
  Fp operator-(const Fp& o) const {
    assert(p_ == o.p_);
    return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_, 0);
  }
  Fp operator*(const Fp& o) const {
    assert(p_ == o.p_);
    return Fp((v_ * o.v_) % p_, p_, 0);
  }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  /// Extended Euclid; precomputes nothing, p is desk-scale.
  Fp inv() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_);
    std::int64_t new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    assert(r == 1);
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_, 0);
  }

  Fp mul_int(std::int64_t k) const { return *this * from_int64(k, p_); }

  bool operator==(const Fp& o) const {
    assert(p_ == o.p_ || v_ == 0 || o.v_ == 0);
    return v_ == o.v_ && (v_ == 0 || p_ == o.p_);
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string str() const { return std::to_string(v_); }

 private:
  Fp(std::uint64_t v, std::uint64_t p, int /*raw*/) : v_(v), p_(p) {}
  std::uint64_t v_;
  std::uint64_t p_;
};

}  // namespace planemap
