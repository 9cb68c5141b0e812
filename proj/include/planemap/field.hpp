#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "planemap/prime_field.hpp"
#include "planemap/primes.hpp"
#include "planemap/rational.hpp"

namespace planemap {

enum class FieldKind { rationals, prime_field };

/// Runtime description of the coefficient field: Q or F_p. Constructing a
/// prime_field spec validates primality (deterministic Miller-Rabin); the
/// [2^30, 2^31) window applies where primes are *sampled*, not to explicit
/// small primes used in unit tests.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }

  static FieldSpec prime_field(std::uint64_t p) {
    if (p <= 2 || p >= (std::uint64_t{1} << 32)) {
      throw std::invalid_argument("FieldSpec: prime must be odd and < 2^32");
    }
    if (!is_prime_u64(p)) {
      throw std::invalid_argument("FieldSpec: " + std::to_string(p) +
                                  " is not prime");
    }
    return FieldSpec(FieldKind::prime_field, p);
  }

  FieldKind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == FieldKind::rationals; }

  std::uint64_t prime() const {
    if (kind_ != FieldKind::prime_field) {
      throw std::logic_error("FieldSpec: no prime in Q mode");
    }
    return prime_;
  }

  /// 0 for Q, p for F_p.
  std::uint64_t characteristic() const {
    return kind_ == FieldKind::prime_field ? prime_ : 0;
  }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && prime_ == o.prime_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const {
    return kind_ == FieldKind::rationals ? "Q"
                                         : "F_" + std::to_string(prime_);
  }

 private:
  FieldSpec(FieldKind k, std::uint64_t p) : kind_(k), prime_(p) {}
  FieldKind kind_;
  std::uint64_t prime_;
};

/// A coefficient field element: exact, value-semantic, self-describing.
template <class K>
concept CoefficientField = requires(const K a, const K b) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.inv() } -> std::same_as<K>;
  { a.mul_int(std::int64_t{1}) } -> std::same_as<K>;
  { a.str() } -> std::same_as<std::string>;
};

template <class K>
inline constexpr FieldKind field_kind_of = FieldKind::rationals;
template <>
inline constexpr FieldKind field_kind_of<Fp> = FieldKind::prime_field;

template <class K>
K coeff_from_int(std::int64_t n, const FieldSpec& spec);

template <>
inline Rational coeff_from_int<Rational>(std::int64_t n, const FieldSpec&) {
  return Rational::from_int64(n);
}
template <>
inline Fp coeff_from_int<Fp>(std::int64_t n, const FieldSpec& spec) {
  return Fp::from_int64(n, spec.prime());
}

static_assert(CoefficientField<Rational>);
static_assert(CoefficientField<Fp>);

}  // namespace planemap
