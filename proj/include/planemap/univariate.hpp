#pragma once

#include <optional>
#include <vector>

#include "planemap/errors.hpp"
#include "planemap/polynomial.hpp"

namespace planemap {

namespace uv {

/// Dense univariate arithmetic on coefficient vectors (index = power).
/// Vectors are kept trimmed: no trailing zero coefficients.

template <class K>
void trim(std::vector<K>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

template <class K>
std::int64_t deg(const std::vector<K>& c) {
  return static_cast<std::int64_t>(c.size()) - 1;
}

template <class K>
std::vector<K> derivative(const std::vector<K>& c) {
  std::vector<K> d;
  for (std::size_t i = 1; i < c.size(); ++i) {
    d.push_back(c[i].mul_int(static_cast<std::int64_t>(i)));
  }
  trim(d);
  return d;
}

template <class K>
std::vector<K> make_monic(std::vector<K> c) {
  if (c.empty()) return c;
  K inv = c.back().inv();
  for (K& x : c) x = x * inv;
  return c;
}

/// Division with remainder; divisor nonzero.
template <class K>
std::pair<std::vector<K>, std::vector<K>> divmod(std::vector<K> num,
                                                 const std::vector<K>& den) {
  if (den.empty()) throw std::domain_error("univariate division by zero");
  std::vector<K> quot;
  if (num.size() >= den.size()) {
    quot.assign(num.size() - den.size() + 1, den.back() - den.back());
  }
  K lead_inv = den.back().inv();
  while (num.size() >= den.size()) {
    K q = num.back() * lead_inv;
    std::size_t shift = num.size() - den.size();
    quot[shift] = q;
    for (std::size_t i = 0; i < den.size(); ++i) {
      num[shift + i] = num[shift + i] - q * den[i];
    }
    // The top coefficient cancels exactly; trim it and any new zeros.
    num.pop_back();
    trim(num);
  }
  trim(quot);
  return {std::move(quot), std::move(num)};
}

/// Monic gcd by the Euclidean algorithm.
template <class K>
std::vector<K> gcd(std::vector<K> a, std::vector<K> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(std::move(a), b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

/// Exact quotient; nullopt when the division leaves a remainder.
template <class K>
std::optional<std::vector<K>> div_exact(const std::vector<K>& a,
                                        const std::vector<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) return std::nullopt;
  return q;
}

}  // namespace uv

/// The variable a univariate polynomial actually involves; nullopt for
/// constants. Throws when two or more variables appear.
template <class K>
std::optional<std::size_t> univariate_variable(const Polynomial<K>& p) {
  std::optional<std::size_t> var;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      if (m.exp(v) == 0) continue;
      if (var && *var != v) {
        throw std::invalid_argument("expected a univariate polynomial");
      }
      var = v;
    }
  }
  return var;
}

template <class K>
std::vector<K> dense_coeffs(const Polynomial<K>& p, std::size_t var) {
  std::vector<K> c(static_cast<std::size_t>(p.degree_in(var) + 1),
                   coeff_from_int<K>(0, p.ring()->field()));
  for (const auto& [m, k] : p.terms()) {
    c[m.exp(var)] = k;
  }
  uv::trim(c);
  return c;
}

template <class K>
Polynomial<K> from_dense_coeffs(const RingPtr& ring, std::size_t var,
                                const std::vector<K>& c) {
  Polynomial<K> p(ring);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    Monomial m(ring->nvars());
    m.set_exp(var, static_cast<std::uint32_t>(i));
    p.add_term(m, c[i]);
  }
  return p;
}

/// Monic p / gcd(p, p'): same roots as p, each simple; the degree counts the
/// distinct roots over the algebraic closure. Requires characteristic 0 or
/// characteristic > deg p; otherwise the prime is too small and the caller
/// should resample.
template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("squarefree_part: zero polynomial");
  }
  auto var = univariate_variable(p);
  if (!var) {
    return Polynomial<K>::constant_int(p.ring(), 1);
  }
  const std::int64_t d = p.degree_in(*var);
  const std::uint64_t ch = p.ring()->field().characteristic();
  if (ch != 0 && static_cast<std::int64_t>(ch) <= d) {
    throw SmallCharacteristicError("squarefree_part: prime too small (p <= deg), resample");
  }
  std::vector<K> u = dense_coeffs(p, *var);
  std::vector<K> g = uv::gcd(u, uv::derivative(u));
  auto s = uv::div_exact(u, g);
  if (!s) throw std::logic_error("squarefree_part: gcd does not divide");
  return from_dense_coeffs(p.ring(), *var, uv::make_monic(std::move(*s)));
}

}  // namespace planemap
