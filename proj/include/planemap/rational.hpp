#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace planemap {

/// Arbitrary-precision rational, always canonical: gcd(num, den) = 1 and
/// den > 0. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from machine ints is handy
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  static Rational from_int64(std::int64_t n) {
    Rational r;
    r.v_ = mpz_class(std::to_string(n));
    return r;
  }

  /// Parses "a" or "a/b" with optional sign.
  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
      throw std::invalid_argument("Rational: bad literal '" + s + "'");
    }
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const {
    return Rational(mpq_class(v_ + o.v_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(mpq_class(v_ - o.v_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(mpq_class(v_ * o.v_));
  }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den(), num());
  }

  Rational mul_int(std::int64_t k) const {
    return *this * from_int64(k);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  std::string str() const { return v_.get_str(); }

 private:
  explicit Rational(const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

}  // namespace planemap
