#pragma once

#include <array>
#include <cstdint>

#include "planemap/polynomial.hpp"
#include "planemap/random_poly.hpp"
#include "planemap/rng.hpp"

namespace planemap {

/// Invertible 2x2 coordinate change, row-major [[a, b], [c, d]], acting on
/// the column vector (x, y). `provenance_seed` records how a sampled change
/// was drawn (0 for hand-constructed ones).
template <CoefficientField K>
struct LinearChange {
  std::array<K, 4> m;
  std::uint64_t provenance_seed = 0;

  K det() const { return m[0] * m[3] - m[1] * m[2]; }

  static LinearChange identity(const FieldSpec& spec) {
    K one = coeff_from_int<K>(1, spec);
    K zero = coeff_from_int<K>(0, spec);
    return LinearChange{{one, zero, zero, one}, 0};
  }

  /// Entries drawn from the coefficient sample set, resampled until the
  /// determinant is nonzero.
  static LinearChange random(const FieldSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
      LinearChange L{{random_coeff<K>(spec, rng), random_coeff<K>(spec, rng),
                      random_coeff<K>(spec, rng), random_coeff<K>(spec, rng)},
                     seed};
      if (!L.det().is_zero()) return L;
    }
  }
};

/// p(L * (x, y)^T): substitutes x -> a*x + b*y, y -> c*x + d*y. Total degree
/// is preserved because L is invertible.
template <CoefficientField K>
Polynomial<K> apply_linear_change(const Polynomial<K>& p,
                                  const LinearChange<K>& L) {
  const RingPtr& ring = p.ring();
  if (ring->nvars() != 2) {
    throw std::invalid_argument("apply_linear_change: 2-variable ring required");
  }
  if (L.det().is_zero()) {
    throw std::invalid_argument("apply_linear_change: singular matrix");
  }
  Polynomial<K> x = Polynomial<K>::variable(ring, 0);
  Polynomial<K> y = Polynomial<K>::variable(ring, 1);
  std::array<Polynomial<K>, 2> images = {x.scaled(L.m[0]) + y.scaled(L.m[1]),
                                         x.scaled(L.m[2]) + y.scaled(L.m[3])};
  return p.compose(ring, images);
}

}  // namespace planemap
