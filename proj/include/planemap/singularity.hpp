#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "planemap/errors.hpp"
#include "planemap/groebner.hpp"
#include "planemap/linear_change.hpp"
#include "planemap/polynomial.hpp"
#include "planemap/random_poly.hpp"
#include "planemap/resultant.hpp"
#include "planemap/rng.hpp"
#include "planemap/univariate.hpp"
#include "planemap/zero_dim.hpp"

namespace planemap {

/// A polynomial mapping F = (f, g): K^2 -> K^2 with declared degree bounds
/// deg f <= d1, deg g <= d2, d1 >= d2 >= 1.
template <CoefficientField K>
struct MappingPair {
  Polynomial<K> f;
  Polynomial<K> g;
  std::int64_t d1;
  std::int64_t d2;

  MappingPair(Polynomial<K> f_, Polynomial<K> g_, std::int64_t d1_,
              std::int64_t d2_)
      : f(std::move(f_)), g(std::move(g_)), d1(d1_), d2(d2_) {
    require_same_ring(f.ring(), g.ring(), "MappingPair");
    if (f.ring()->nvars() != 2) {
      throw std::invalid_argument("MappingPair: 2-variable ring required");
    }
    if (!(d1 >= d2 && d2 >= 1)) {
      throw std::invalid_argument("MappingPair: need d1 >= d2 >= 1");
    }
    if (f.total_degree() > d1) {
      throw std::invalid_argument("MappingPair: deg f > d1");
    }
    if (g.total_degree() > d2) {
      throw std::invalid_argument("MappingPair: deg g > d2");
    }
  }

  const RingPtr& ring() const { return f.ring(); }
};

/// Degree data and the closed-form maxima for the (d1, d2) stratum.
struct DegreeBounds {
  std::int64_t R;      // deg C(F) for generic F: d1 + d2 - 2
  std::int64_t D;      // deg Delta(F) for generic F: (d1 + d2 - 2) * d1
  std::int64_t c_max;  // maximal number of cusps
  std::int64_t n_max;  // maximal number of nodes
  bool certifiable;    // d1 * d2 > 2; below that every mapping has 0 and 0
};

inline DegreeBounds formulas(std::int64_t d1, std::int64_t d2) {
  if (!(d1 >= d2 && d2 >= 1)) {
    throw std::invalid_argument("formulas: need d1 >= d2 >= 1");
  }
  DegreeBounds b;
  b.R = d1 + d2 - 2;
  b.D = (d1 + d2 - 2) * d1;
  b.c_max = d1 * d1 + d2 * d2 + 3 * d1 * d2 - 6 * d1 - 6 * d2 + 7;
  const std::int64_t g = std::gcd(d1, d2);
  const std::int64_t num =
      (d1 * d2 - 4) * ((d1 + d2 - 2) * (d1 + d2 - 2) - 2) -
      (g - 5) * (d1 + d2 - 2) - 6;
  if (num % 2 != 0) throw std::logic_error("formulas: odd node numerator");
  b.n_max = num / 2;
  b.certifiable = d1 * d2 > 2;
  return b;
}

template <CoefficientField K>
struct JacobianTriple {
  Polynomial<K> J;    // f_x g_y - f_y g_x
  Polynomial<K> J11;  // J_x f_y - J_y f_x
  Polynomial<K> J12;  // J_x g_y - J_y g_x
};

template <CoefficientField K>
JacobianTriple<K> build_jacobian_triple(const MappingPair<K>& F) {
  const auto fx = F.f.differentiate(0), fy = F.f.differentiate(1);
  const auto gx = F.g.differentiate(0), gy = F.g.differentiate(1);
  Polynomial<K> J = fx * gy - fy * gx;
  const auto Jx = J.differentiate(0), Jy = J.differentiate(1);
  return {J, Jx * fy - Jy * fx, Jx * gy - Jy * gx};
}

/// Result of one cusp-counting run. `distinct` is a lower bound on the
/// number of generalized cusps (exact when no two share an x-coordinate
/// after the coordinate change); `total_multiplicity` is the sum of local
/// indices, INFINITE when the cusp ideal is not zero-dimensional.
template <CoefficientField K>
struct CuspData {
  JacobianTriple<K> triple;
  LinearChange<K> coordinate_change;
  std::int64_t distinct;
  QuotientDimension total_multiplicity;
};

template <CoefficientField K>
CuspData<K> count_cusps(const MappingPair<K>& F, const LinearChange<K>& L) {
  MappingPair<K> FL(apply_linear_change(F.f, L), apply_linear_change(F.g, L),
                    F.d1, F.d2);
  JacobianTriple<K> T = build_jacobian_triple(FL);
  if (T.J.is_zero()) {
    throw DegenerateMappingError("count_cusps: J(F) vanishes identically");
  }
  const RingPtr& ring = F.ring();
  Ideal<K> I = Ideal<K>::of(ring, {T.J, T.J11, T.J12});
  const std::size_t keep[] = {0};  // eliminate y, keep x
  MonomialOrder order = MonomialOrder::elimination(*ring, keep);
  GroebnerBasis<K> G = buchberger(I, order);
  QuotientDimension total = quotient_dimension(G);
  auto inside = kept_basis_part(G, keep);
  if (inside.empty()) {
    throw CurveLocusError("count_cusps: cusp locus contains a curve");
  }
  Polynomial<K> sq = squarefree_part(inside.front());
  return CuspData<K>{std::move(T), L, sq.degree_in(0), total};
}

/// Randomizers for the node ideal: the Rabinowitsch direction (alpha, beta)
/// and the image functional a*f + b*g. Defaults reproduce the plain x - p
/// and f - u setup.
template <CoefficientField K>
struct NodeRandomizers {
  K alpha, beta, a, b;
  std::uint64_t provenance_seed = 0;

  static NodeRandomizers defaults(const FieldSpec& spec) {
    return {coeff_from_int<K>(1, spec), coeff_from_int<K>(0, spec),
            coeff_from_int<K>(1, spec), coeff_from_int<K>(0, spec), 0};
  }

  static NodeRandomizers random(const FieldSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    NodeRandomizers r{random_coeff<K>(spec, rng), random_coeff<K>(spec, rng),
                      random_coeff<K>(spec, rng), random_coeff<K>(spec, rng),
                      seed};
    if ((r.alpha.is_zero() && r.beta.is_zero()) ||
        (r.a.is_zero() && r.b.is_zero())) {
      return random(spec, splitmix64(seed));
    }
    return r;
  }
};

/// Result of one node-counting run over the ordered-pair ideal in
/// (u, t, p, q, x, y). `distinct` is a lower bound on the number of
/// generalized nodes; `ordered_pair_multiplicity` sums nu over ordered pairs
/// (2x the unordered count when all nodes are simple with distinct images).
/// The Rabinowitsch factor removes the locus alpha*(x-p) + beta*(y-q) = 0;
/// for a generic (alpha, beta) this is believed to exclude only the diagonal
/// x = p, y = q among candidate pairs (unproven; the default (1, 0) can also
/// drop pairs that share an x-coordinate, which the retry policy repairs).
template <CoefficientField K>
struct NodeData {
  NodeRandomizers<K> randomizers;
  std::int64_t distinct;
  QuotientDimension ordered_pair_multiplicity;
};

template <CoefficientField K>
NodeData<K> count_nodes(const MappingPair<K>& F,
                        const NodeRandomizers<K>& rnd) {
  if (rnd.alpha.is_zero() && rnd.beta.is_zero()) {
    throw std::invalid_argument("count_nodes: (alpha, beta) = (0, 0)");
  }
  if (rnd.a.is_zero() && rnd.b.is_zero()) {
    throw std::invalid_argument("count_nodes: (a, b) = (0, 0)");
  }
  JacobianTriple<K> T = build_jacobian_triple(F);
  if (T.J.is_zero()) {
    throw DegenerateMappingError("count_nodes: J(F) vanishes identically");
  }
  const FieldSpec& field = F.ring()->field();
  RingPtr R6 = Ring::make({"u", "t", "p", "q", "x", "y"}, field);
  const std::size_t to_xy[] = {4, 5};
  const std::size_t to_pq[] = {2, 3};

  auto fxy = F.f.map_variables(R6, to_xy);
  auto gxy = F.g.map_variables(R6, to_xy);
  auto fpq = F.f.map_variables(R6, to_pq);
  auto gpq = F.g.map_variables(R6, to_pq);
  auto Jxy = T.J.map_variables(R6, to_xy);
  auto Jpq = T.J.map_variables(R6, to_pq);

  auto u = Polynomial<K>::variable(R6, 0);
  auto t = Polynomial<K>::variable(R6, 1);
  auto pv = Polynomial<K>::variable(R6, 2);
  auto qv = Polynomial<K>::variable(R6, 3);
  auto xv = Polynomial<K>::variable(R6, 4);
  auto yv = Polynomial<K>::variable(R6, 5);

  auto direction = (xv - pv).scaled(rnd.alpha) + (yv - qv).scaled(rnd.beta);
  auto rabinowitsch = direction * t - Polynomial<K>::constant_int(R6, 1);
  auto image = fxy.scaled(rnd.a) + gxy.scaled(rnd.b) - u;

  Ideal<K> I = Ideal<K>::of(
      R6, {Jxy, Jpq, fxy - fpq, gxy - gpq, image, rabinowitsch});
  // Degrevlex basis + minimal polynomial of u: same eliminant and quotient
  // dimension as the pure-lex elimination, at a fraction of the cost.
  DegrevlexBasis<K> G = degrevlex_basis(I);
  auto dim = quotient_dimension(G, R6->nvars());
  if (!dim) {
    throw CurveLocusError(
        "count_nodes: node locus contains a curve (F restricted to C(F) is "
        "not birational or worse)");
  }
  Polynomial<K> eliminant = minimal_polynomial(G, u, 0, *dim);
  Polynomial<K> sq = squarefree_part(eliminant);
  return NodeData<K>{rnd, sq.degree_in(0), QuotientDimension::finite(*dim)};
}

/// Executable at-infinity / properness checks. The common-point fields are
/// true when a common point at infinity EXISTS (the bad case); a vanishing
/// leading form counts as a common point, since the projective closure then
/// degenerates.
struct InfinityReport {
  bool common_point_f1_f2;
  bool jacobian_degree_max;
  bool critical_curve_smooth;
  std::optional<bool> common_point_f1_J;  // engaged iff gcd(d1, d2) != d2

  bool all_pass() const {
    return !common_point_f1_f2 && jacobian_degree_max &&
           critical_curve_smooth &&
           (!common_point_f1_J.has_value() || !*common_point_f1_J);
  }
};

template <CoefficientField K>
InfinityReport infinity_checks(const MappingPair<K>& F) {
  JacobianTriple<K> T = build_jacobian_triple(F);
  if (T.J.is_zero()) {
    throw DegenerateMappingError("infinity_checks: J(F) vanishes identically");
  }
  const RingPtr& ring = F.ring();
  const std::int64_t R = F.d1 + F.d2 - 2;

  InfinityReport rep;
  Polynomial<K> Lf = F.f.leading_form(F.d1);
  Polynomial<K> Lg = F.g.leading_form(F.d2);
  rep.common_point_f1_f2 =
      Lf.is_zero() || Lg.is_zero() ||
      binary_form_resultant(Lf, F.d1, Lg, F.d2).is_zero();

  rep.jacobian_degree_max = T.J.total_degree() == R;

  Ideal<K> sing = Ideal<K>::of(
      ring, {T.J, T.J.differentiate(0), T.J.differentiate(1)});
  rep.critical_curve_smooth =
      buchberger(sing, MonomialOrder::lex(*ring)).is_unit_ideal();

  if (std::gcd(F.d1, F.d2) != F.d2) {
    Polynomial<K> LJ = T.J.leading_form(R);
    rep.common_point_f1_J =
        Lf.is_zero() || LJ.is_zero() ||
        binary_form_resultant(Lf, F.d1, LJ, R).is_zero();
  }
  return rep;
}

/// Probes mu(F) = d1*d2 (Bezout-maximal fiber over a random target): strong
/// evidence of properness with full topological degree. One-sided; a false
/// answer retries once with a fresh target before reporting.
template <CoefficientField K>
bool check_topological_degree(const MappingPair<K>& F, Rng& rng) {
  const RingPtr& ring = F.ring();
  for (int attempt = 0; attempt < 2; ++attempt) {
    K a = random_coeff<K>(ring->field(), rng);
    K b = random_coeff<K>(ring->field(), rng);
    Ideal<K> I = Ideal<K>::of(
        ring, {F.f - Polynomial<K>::constant(ring, a),
               F.g - Polynomial<K>::constant(ring, b)});
    GroebnerBasis<K> G = buchberger(I, MonomialOrder::lex(*ring));
    QuotientDimension q = quotient_dimension(G);
    if (q.is_finite() &&
        q.value() == static_cast<std::uint64_t>(F.d1 * F.d2)) {
      return true;
    }
  }
  return false;
}

}  // namespace planemap
