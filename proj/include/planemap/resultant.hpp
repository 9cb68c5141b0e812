#pragma once

#include <vector>

#include "planemap/polynomial.hpp"

namespace planemap {

namespace det_detail {

/// Fraction-free (Bareiss) determinant of a matrix of polynomials. All
/// divisions are exact by construction; row pivoting handles zero pivots.
template <class K>
Polynomial<K> bareiss_determinant(std::vector<std::vector<Polynomial<K>>> m,
                                  const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial<K>::constant_int(ring, 1);
  int sign = 1;
  Polynomial<K> prev = Polynomial<K>::constant_int(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial<K>(ring);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial<K> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        if (prev.is_constant() && !prev.is_zero() &&
            prev.leading_term_lex().second.is_one()) {
          m[i][j] = std::move(num);
        } else {
          auto q = num.try_divide_exact(prev);
          if (!q) throw std::logic_error("bareiss: inexact division");
          m[i][j] = std::move(*q);
        }
      }
      m[i][k] = Polynomial<K>(ring);
    }
    prev = m[k][k];
  }
  Polynomial<K> det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace det_detail

/// Determinant of the Sylvester matrix of p and q with respect to v (actual
/// degrees). Vanishes identically iff p and q share a factor of positive
/// v-degree. Entries are polynomials in the remaining variables.
template <CoefficientField K>
Polynomial<K> resultant(const Polynomial<K>& p, const Polynomial<K>& q,
                        std::size_t v) {
  require_same_ring(p.ring(), q.ring(), "resultant");
  const std::int64_t dp = p.degree_in(v);
  const std::int64_t dq = q.degree_in(v);
  if (dp <= 0 || dq <= 0) {
    throw std::invalid_argument("resultant: inputs must have positive degree in v");
  }
  const RingPtr& ring = p.ring();
  auto pc = p.coeffs_in(v);
  auto qc = q.coeffs_in(v);
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<Polynomial<K>>> m(
      n, std::vector<Polynomial<K>>(n, Polynomial<K>(ring)));
  for (std::int64_t row = 0; row < dq; ++row) {
    for (std::int64_t k = 0; k <= dp; ++k) {
      m[row][row + k] = pc[static_cast<std::size_t>(dp - k)];
    }
  }
  for (std::int64_t row = 0; row < dp; ++row) {
    for (std::int64_t k = 0; k <= dq; ++k) {
      m[static_cast<std::size_t>(dq + row)][row + k] =
          qc[static_cast<std::size_t>(dq - k)];
    }
  }
  return det_detail::bareiss_determinant(std::move(m), ring);
}

/// Scalar resultant of two binary forms of *formal* degrees dp and dq in a
/// 2-variable ring. Zero iff the forms share a projective root (a common
/// point at infinity of the corresponding affine curves). A zero input form
/// gives 0, matching the degenerate geometry.
template <CoefficientField K>
K binary_form_resultant(const Polynomial<K>& p, std::int64_t dp,
                        const Polynomial<K>& q, std::int64_t dq) {
  require_same_ring(p.ring(), q.ring(), "binary_form_resultant");
  const RingPtr& ring = p.ring();
  if (ring->nvars() != 2) {
    throw std::invalid_argument("binary_form_resultant: 2-variable ring required");
  }
  if (dp <= 0 || dq <= 0) {
    throw std::invalid_argument("binary_form_resultant: positive formal degrees");
  }
  const K zero = coeff_from_int<K>(0, ring->field());
  auto coeffs = [&](const Polynomial<K>& f, std::int64_t d) {
    std::vector<K> c(static_cast<std::size_t>(d + 1), zero);  // c[i]: x^i y^(d-i)
    for (const auto& [mono, coef] : f.terms()) {
      if (static_cast<std::int64_t>(mono.degree()) != d) {
        throw std::invalid_argument(
            "binary_form_resultant: input not homogeneous of the stated degree");
      }
      c[mono.exp(0)] = coef;
    }
    return c;
  };
  auto pc = coeffs(p, dp);
  auto qc = coeffs(q, dq);

  const std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<K>> m(n, std::vector<K>(n, zero));
  for (std::int64_t row = 0; row < dq; ++row) {
    for (std::int64_t k = 0; k <= dp; ++k) {
      m[row][row + k] = pc[static_cast<std::size_t>(dp - k)];
    }
  }
  for (std::int64_t row = 0; row < dp; ++row) {
    for (std::int64_t k = 0; k <= dq; ++k) {
      m[static_cast<std::size_t>(dq + row)][row + k] =
          qc[static_cast<std::size_t>(dq - k)];
    }
  }

  // Plain Gaussian elimination over the field.
  K det = coeff_from_int<K>(1, ring->field());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return zero;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det = det * m[k][k];
    K inv = m[k][k].inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      K f = m[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) {
        m[i][j] = m[i][j] - f * m[k][j];
      }
    }
  }
  return det;
}

}  // namespace planemap
