#pragma once

#include <map>
#include <optional>
#include <vector>

#include "planemap/groebner.hpp"

namespace planemap {

/// Internal fast path for zero-dimensional ideals. Pure lex shreds the
/// 6-variable node ideals, so the quotient is computed from a degrevlex
/// basis instead, and the univariate eliminant is recovered as the minimal
/// polynomial of the kept coordinate in the quotient algebra, which is the
/// same canonical monic generator of the intersection with k[v] that a lex
/// elimination returns. The
/// public operations (elimination_ideal, quotient_dimension) keep their lex
/// contracts; values agree because both are order-independent.

template <CoefficientField K>
struct DegrevlexBasis {
  std::vector<gb_detail::TermVec<K>> basis;  // engine rep, unpermuted exponents
  std::vector<Monomial> leading;

  bool is_unit_ideal() const {
    return basis.size() == 1 && basis[0].front().first.is_unit();
  }
};

template <CoefficientField K>
DegrevlexBasis<K> degrevlex_basis(const Ideal<K>& ideal) {
  std::vector<std::uint32_t> identity(ideal.ring()->nvars());
  for (std::uint32_t i = 0; i < identity.size(); ++i) identity[i] = i;
  std::vector<gb_detail::TermVec<K>> gens;
  for (const auto& g : ideal.generators()) {
    gens.push_back(
        gb_detail::to_engine<gb_detail::DegRevLexCmp>(gb_detail::cleared(g),
                                                      identity));
  }
  DegrevlexBasis<K> out;
  out.basis = gb_detail::buchberger_core<gb_detail::DegRevLexCmp>(
      std::move(gens));
  out.leading.reserve(out.basis.size());
  for (const auto& g : out.basis) out.leading.push_back(g.front().first);
  return out;
}

/// Standard-monomial count; nullopt when not zero-dimensional.
template <CoefficientField K>
std::optional<std::uint64_t> quotient_dimension(const DegrevlexBasis<K>& G,
                                                std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& lm : G.leading) {
      if (lm.is_pure_power_of(v)) {
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return gb_detail::count_standard(G.leading, 0, nvars);
}

/// Monic minimal polynomial of the class of `element` in k[vars]/I, written
/// as a univariate polynomial in variable `out_var`. For a kept coordinate v
/// this generates I ∩ k[v]. Krylov iteration: reduce successive powers and
/// watch for the first linear dependence; `dim_bound` (the quotient
/// dimension) caps the loop.
template <CoefficientField K>
Polynomial<K> minimal_polynomial(const DegrevlexBasis<K>& G,
                                 const Polynomial<K>& element,
                                 std::size_t out_var,
                                 std::uint64_t dim_bound) {
  using Cmp = gb_detail::DegRevLexCmp;
  using Work = gb_detail::WorkMap<K, Cmp>;
  const RingPtr& ring = element.ring();
  std::vector<std::uint32_t> identity(ring->nvars());
  for (std::uint32_t i = 0; i < identity.size(); ++i) identity[i] = i;

  const auto w = gb_detail::to_engine<Cmp>(element, identity);
  const K one = coeff_from_int<K>(1, ring->field());

  struct Row {
    gb_detail::TermVec<K> vec;  // pivot = front, normalized to 1
    std::vector<K> comb;        // coefficients over powers 0..k
  };
  std::vector<Row> rows;
  std::map<Monomial, std::size_t, gb_detail::MonoGreater<Cmp>> pivot_of;

  // Power sequence: v_k = NF(element^k).
  gb_detail::TermVec<K> v_power{{Monomial(ring->nvars()), one}};
  v_power = gb_detail::reduce_full<Cmp>(v_power, G.basis);

  for (std::uint64_t k = 0; k <= dim_bound + 1; ++k) {
    Work vv;
    for (const auto& [m, c] : v_power) vv.emplace(m, c);
    std::vector<K> comb(static_cast<std::size_t>(k) + 1,
                        coeff_from_int<K>(0, ring->field()));
    comb.back() = one;

    while (!vv.empty()) {
      auto it = pivot_of.find(vv.begin()->first);
      if (it == pivot_of.end()) break;
      const Row& row = rows[it->second];
      const K factor = vv.begin()->second;
      for (const auto& [m, c] : row.vec) {
        gb_detail::map_add(vv, m, -(factor * c));
      }
      for (std::size_t j = 0; j < row.comb.size(); ++j) {
        comb[j] = comb[j] - factor * row.comb[j];
      }
    }

    if (vv.empty()) {
      Polynomial<K> h(ring);
      Monomial m(ring->nvars());
      for (std::size_t j = 0; j < comb.size(); ++j) {
        m.set_exp(out_var, static_cast<std::uint32_t>(j));
        h.add_term(m, comb[j]);
      }
      return h;  // monic: comb.back() stayed 1
    }

    Row row;
    row.vec = gb_detail::to_vec(std::move(vv));
    const K inv = row.vec.front().second.inv();
    for (auto& [m, c] : row.vec) c = c * inv;
    for (auto& c : comb) c = c * inv;
    row.comb = std::move(comb);
    pivot_of.emplace(row.vec.front().first, rows.size());
    rows.push_back(std::move(row));

    // Next power.
    Work next;
    for (const auto& [vm, vc] : v_power) {
      for (const auto& [wm, wc] : w) {
        gb_detail::map_add(next, vm * wm, vc * wc);
      }
    }
    v_power = gb_detail::reduce_full<Cmp>(gb_detail::to_vec(std::move(next)),
                                          G.basis);
  }
  throw std::logic_error("minimal_polynomial: no dependence within bound");
}

}  // namespace planemap
