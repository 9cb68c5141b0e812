#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace planemap {

/// Exponent vector of a power product. The ring dimension is small by
/// construction (2 geometric variables, 6 in the node ring), so exponents
/// live inline.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 6;

  explicit Monomial(std::size_t nvars) : e_{}, n_(static_cast<std::uint32_t>(nvars)) {
    assert(nvars >= 1 && nvars <= kMaxVars);
  }

  Monomial(std::initializer_list<std::uint32_t> exps) : e_{}, n_(0) {
    assert(exps.size() >= 1 && exps.size() <= kMaxVars);
    for (std::uint32_t x : exps) e_[n_++] = x;
  }

  std::size_t nvars() const { return n_; }
  std::uint32_t exp(std::size_t i) const {
    assert(i < n_);
    return e_[i];
  }
  void set_exp(std::size_t i, std::uint32_t e) {
    assert(i < n_);
    e_[i] = e;
  }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += e_[i];
    return d;
  }

  bool is_unit() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != 0) return false;
    return true;
  }

  /// Nonzero exponent only at variable v (the unit monomial qualifies).
  bool is_pure_power_of(std::size_t v) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (i != v && e_[i] != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    assert(n_ == o.n_);
    Monomial r(*this);
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// this / o; requires o.divides(*this).
  Monomial div(const Monomial& o) const {
    assert(o.divides(*this));
    Monomial r(*this);
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] -= o.e_[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    assert(a.n_ == b.n_);
    Monomial r(a);
    for (std::size_t i = 0; i < a.n_; ++i)
      if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
    return r;
  }

  bool operator==(const Monomial& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != o.e_[i]) return false;
    return true;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Lexicographic comparison with variable 0 most significant.
  static int lex_cmp(const Monomial& a, const Monomial& b) {
    assert(a.n_ == b.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    }
    return 0;
  }

  /// result.exp(i) = exp(perm[i]); perm[0] names the most significant
  /// original variable of the target order.
  Monomial permuted(std::span<const std::uint32_t> perm) const {
    assert(perm.size() == n_);
    Monomial r(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[perm[i]];
    return r;
  }

  /// Inverse of permuted(): result.exp(perm[i]) = exp(i).
  Monomial unpermuted(std::span<const std::uint32_t> perm) const {
    assert(perm.size() == n_);
    Monomial r(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < n_; ++i) r.e_[perm[i]] = e_[i];
    return r;
  }

 private:
  std::array<std::uint32_t, kMaxVars> e_;
  std::uint32_t n_;
};

/// Strict-descending canonical order (plain lex, variable 0 first): term maps
/// keyed this way iterate leading term first.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::lex_cmp(a, b) > 0;
  }
};

}  // namespace planemap
