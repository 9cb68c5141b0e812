#pragma once

#include <cstdint>

#include "planemap/polynomial.hpp"
#include "planemap/rng.hpp"

namespace planemap {

/// Random coefficient sample set: integers in [-1000, 1000] in Q mode (small
/// heights keep Q-mode Groebner bases feasible), uniform field elements in
/// F_p mode.
inline constexpr std::int64_t kRationalCoeffBound = 1000;

template <class K>
K random_coeff(const FieldSpec& spec, Rng& rng);

template <>
inline Rational random_coeff<Rational>(const FieldSpec&, Rng& rng) {
  return Rational::from_int64(
      rng.range_signed(-kRationalCoeffBound, kRationalCoeffBound));
}

template <>
inline Fp random_coeff<Fp>(const FieldSpec& spec, Rng& rng) {
  return Fp(rng.below(spec.prime()), spec.prime());
}

template <class K>
K random_nonzero_coeff(const FieldSpec& spec, Rng& rng) {
  for (;;) {
    K c = random_coeff<K>(spec, rng);
    if (!c.is_zero()) return c;
  }
}

namespace detail {

template <class K>
void fill_dense(Polynomial<K>& p, Monomial& m, std::size_t var,
                std::int64_t remaining, const FieldSpec& spec, Rng& rng) {
  if (var + 1 == m.nvars()) {
    for (std::int64_t e = 0; e <= remaining; ++e) {
      m.set_exp(var, static_cast<std::uint32_t>(e));
      p.add_term(m, random_coeff<K>(spec, rng));
    }
    m.set_exp(var, 0);
    return;
  }
  for (std::int64_t e = 0; e <= remaining; ++e) {
    m.set_exp(var, static_cast<std::uint32_t>(e));
    fill_dense(p, m, var + 1, remaining - e, spec, rng);
  }
  m.set_exp(var, 0);
}

}  // namespace detail

/// Dense random polynomial of total degree exactly d: every monomial of
/// degree <= d gets a draw from the sample set, and the whole draw is
/// repeated until the degree-d part is nonzero. Deterministic given rng
/// state.
template <class K>
Polynomial<K> random_polynomial(const RingPtr& ring, std::int64_t d,
                                Rng& rng) {
  if (d < 0) throw std::invalid_argument("random_polynomial: d >= 0 required");
  for (;;) {
    Polynomial<K> p(ring);
    Monomial m(ring->nvars());
    detail::fill_dense(p, m, 0, d, ring->field(), rng);
    if (!p.leading_form(d).is_zero()) return p;
  }
}

}  // namespace planemap
