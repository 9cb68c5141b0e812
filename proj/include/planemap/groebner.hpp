#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "planemap/polynomial.hpp"
#include "planemap/rational.hpp"

namespace planemap {

/// Finitely generated ideal. The zero ideal is represented explicitly (flag +
/// empty generator list) so elimination can distinguish "no constraint" from
/// the unit ideal; ordinary ideals have nonempty, nonzero generators.
template <CoefficientField K>
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial<K>> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {
    if (gens_.empty()) {
      throw std::invalid_argument("Ideal: no generators (use zero_ideal)");
    }
    for (const auto& g : gens_) {
      require_same_ring(ring_, g.ring(), "Ideal");
      if (g.is_zero()) throw std::invalid_argument("Ideal: zero generator");
    }
  }

  /// Drops zero polynomials; the result is the zero ideal if none survive.
  static Ideal of(RingPtr ring, const std::vector<Polynomial<K>>& gens) {
    std::vector<Polynomial<K>> kept;
    for (const auto& g : gens) {
      if (!g.is_zero()) kept.push_back(g);
    }
    if (kept.empty()) return zero_ideal(std::move(ring));
    return Ideal(std::move(ring), std::move(kept));
  }

  static Ideal zero_ideal(RingPtr ring) { return Ideal(std::move(ring), 0); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

 private:
  Ideal(RingPtr ring, int /*zero tag*/) : ring_(std::move(ring)) {}
  RingPtr ring_;
  std::vector<Polynomial<K>> gens_;
};

/// Dimension of the quotient ring as a vector space: a count when the ideal
/// is zero-dimensional, INFINITE otherwise.
class QuotientDimension {
 public:
  static QuotientDimension finite(std::uint64_t v) {
    QuotientDimension q;
    q.v_ = v;
    return q;
  }
  static QuotientDimension infinite() { return QuotientDimension(); }

  bool is_finite() const { return v_.has_value(); }
  std::uint64_t value() const {
    if (!v_) throw std::logic_error("QuotientDimension: INFINITE");
    return *v_;
  }

  bool operator==(const QuotientDimension& o) const { return v_ == o.v_; }
  bool operator!=(const QuotientDimension& o) const { return v_ != o.v_; }

  std::string str() const {
    return v_ ? std::to_string(*v_) : std::string("INFINITE");
  }

 private:
  std::optional<std::uint64_t> v_;
};

namespace gb_detail {

/// Engine comparators. The engine runs either plain lex on order-permuted
/// exponents (the public lex/elimination orders) or degrevlex on unpermuted
/// exponents (internal fast path for zero-dimensional work; all public
/// outputs stay lex-canonical).
struct LexCmp {
  static int cmp(const Monomial& a, const Monomial& b) {
    return Monomial::lex_cmp(a, b);
  }
};

struct DegRevLexCmp {
  static int cmp(const Monomial& a, const Monomial& b) {
    const std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
      if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
  }
};

template <class Cmp>
struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Cmp::cmp(a, b) > 0;
  }
};

/// Engine representation: terms sorted by strictly descending active order.
/// Basis elements are monic.
template <class K>
using Term = std::pair<Monomial, K>;
template <class K>
using TermVec = std::vector<Term<K>>;
template <class K, class Cmp>
using WorkMap = std::map<Monomial, K, MonoGreater<Cmp>>;

template <class K, class Cmp>
void map_add(WorkMap<K, Cmp>& w, const Monomial& m, const K& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = w.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) w.erase(it);
  }
}

template <class K, class Cmp>
TermVec<K> to_vec(WorkMap<K, Cmp>&& w) {
  TermVec<K> v;
  v.reserve(w.size());
  for (auto& [m, c] : w) v.emplace_back(m, c);
  return v;
}

template <class K>
TermVec<K> make_monic(TermVec<K> v) {
  if (v.empty() || v.front().second.is_one()) return v;
  K inv = v.front().second.inv();
  for (auto& [m, c] : v) c = c * inv;
  return v;
}

/// Full normal form of p modulo monic reducers: repeatedly cancels the
/// leading reducible term, moves irreducible leads to the remainder.
template <class Cmp, class K>
TermVec<K> reduce_full(const TermVec<K>& p,
                       const std::vector<TermVec<K>>& basis) {
  WorkMap<K, Cmp> work;
  for (const auto& [m, c] : p) work.emplace(m, c);
  TermVec<K> rem;
  while (!work.empty()) {
    auto lead = work.begin();
    const Monomial m = lead->first;
    const K c = lead->second;
    const TermVec<K>* red = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && g.front().first.divides(m)) {
        red = &g;
        break;
      }
    }
    if (red == nullptr) {
      rem.emplace_back(m, c);
      work.erase(lead);
      continue;
    }
    const Monomial q = m.div(red->front().first);
    for (const auto& [gm, gc] : *red) {
      map_add(work, q * gm, -(c * gc));
    }
  }
  return rem;
}

/// S-polynomial of two monic polynomials.
template <class Cmp, class K>
TermVec<K> s_poly(const TermVec<K>& f, const TermVec<K>& g) {
  const Monomial l = Monomial::lcm(f.front().first, g.front().first);
  const Monomial uf = l.div(f.front().first);
  const Monomial ug = l.div(g.front().first);
  WorkMap<K, Cmp> w;
  for (const auto& [m, c] : f) map_add(w, uf * m, c);
  for (const auto& [m, c] : g) map_add(w, ug * m, -c);
  return to_vec(std::move(w));
}

struct PairKey {
  std::uint64_t deg;
  Monomial lcm;
  std::size_t i, j;

  bool operator<(const PairKey& o) const {
    if (deg != o.deg) return deg < o.deg;
    int c = Monomial::lex_cmp(lcm, o.lcm);
    if (c != 0) return c < 0;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

/// Buchberger with the normal (minimal lcm degree) selection strategy and
/// the two classical criteria, followed by inter-reduction. Input and output
/// are in engine representation; output is the unique reduced basis, sorted
/// by descending leading monomial.
template <class Cmp, class K>
std::vector<TermVec<K>> buchberger_core(std::vector<TermVec<K>> gens) {
  std::vector<TermVec<K>> G;
  for (auto& g : gens) {
    if (!g.empty()) G.push_back(make_monic(std::move(g)));
  }

  std::set<PairKey> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_ij;
  auto push_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = Monomial::lcm(G[i].front().first, G[k].front().first);
      pending.insert(PairKey{l.degree(), l, i, k});
      pending_ij.emplace(i, k);
    }
  };
  for (std::size_t k = 1; k < G.size(); ++k) push_pairs_for(k);

  while (!pending.empty()) {
    PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    pending_ij.erase({pk.i, pk.j});

    const Monomial& lmi = G[pk.i].front().first;
    const Monomial& lmj = G[pk.j].front().first;
    // Product criterion: coprime leading monomials.
    if (pk.lcm == lmi * lmj) continue;
    // Chain criterion: some lm_k divides the lcm and both companion pairs
    // have already been handled.
    bool chained = false;
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!G[k].front().first.divides(pk.lcm)) continue;
      auto a = std::minmax(pk.i, k);
      auto b = std::minmax(pk.j, k);
      if (!pending_ij.count({a.first, a.second}) &&
          !pending_ij.count({b.first, b.second})) {
        chained = true;
      }
    }
    if (chained) continue;

    TermVec<K> r = reduce_full<Cmp>(s_poly<Cmp>(G[pk.i], G[pk.j]), G);
    if (!r.empty()) {
      G.push_back(make_monic(std::move(r)));
      push_pairs_for(G.size() - 1);
    }
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<bool> dead(G.size(), false);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (dead[i]) continue;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || dead[j]) continue;
      if (G[j].front().first.divides(G[i].front().first)) {
        if (G[j].front().first == G[i].front().first && j > i) continue;
        dead[i] = true;
        break;
      }
    }
  }
  std::vector<TermVec<K>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!dead[i]) minimal.push_back(std::move(G[i]));
  }

  // Tail-reduce each element against the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<TermVec<K>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = make_monic(reduce_full<Cmp>(minimal[i], others));
  }

  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    return Cmp::cmp(a.front().first, b.front().first) > 0;
  });
  return minimal;
}

template <class Cmp, class K>
TermVec<K> to_engine(const Polynomial<K>& p,
                     std::span<const std::uint32_t> perm) {
  TermVec<K> v;
  v.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) v.emplace_back(m.permuted(perm), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return Cmp::cmp(a.first, b.first) > 0;
  });
  return v;
}

template <class K>
Polynomial<K> from_engine(const TermVec<K>& v, const RingPtr& ring,
                          std::span<const std::uint32_t> perm) {
  Polynomial<K> p(ring);
  for (const auto& [m, c] : v) p.add_term(m.unpermuted(perm), c);
  return p;
}

/// Q-mode keeps the engine inputs integral; reductions still use exact
/// rational arithmetic, but small inputs noticeably shrink intermediates.
template <class K>
Polynomial<K> cleared(const Polynomial<K>& p) {
  return p;
}

inline Polynomial<Rational> cleared(const Polynomial<Rational>& p) {
  mpz_class l(1);
  for (const auto& [m, c] : p.terms()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    l = l / g * c.den();
  }
  if (l == 1) return p;
  return p.scaled(Rational(l));
}

}  // namespace gb_detail

/// Reduced Groebner basis with respect to a monomial order. Elements are
/// monic with no term divisible by another element's leading term.
template <CoefficientField K>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order,
                std::vector<Polynomial<K>> basis)
      : ring_(std::move(ring)),
        order_(std::move(order)),
        basis_(std::move(basis)) {
    lms_.reserve(basis_.size());
    for (const auto& g : basis_) lms_.push_back(leading_monomial(g, order_));
  }

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<K>>& basis() const { return basis_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }

  bool is_unit_ideal() const {
    return basis_.size() == 1 && basis_[0].is_constant() &&
           !basis_[0].is_zero();
  }

  static Monomial leading_monomial(const Polynomial<K>& p,
                                   const MonomialOrder& order) {
    if (p.is_zero()) throw std::logic_error("leading monomial of zero");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms()) {
      if (best == nullptr || order.compare(m, *best) > 0) best = &m;
    }
    return *best;
  }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial<K>> basis_;
  std::vector<Monomial> lms_;
};

/// Reduced Groebner basis of the ideal. Deterministic: normal pair-selection
/// strategy, Buchberger's product and chain criteria, final auto-reduction
/// and monic scaling.
template <CoefficientField K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, const MonomialOrder& order) {
  if (order.nvars() != ideal.ring()->nvars()) {
    throw std::invalid_argument("buchberger: order/ring mismatch");
  }
  std::vector<gb_detail::TermVec<K>> gens;
  for (const auto& g : ideal.generators()) {
    gens.push_back(gb_detail::to_engine<gb_detail::LexCmp>(
        gb_detail::cleared(g), order.perm()));
  }
  auto reduced = gb_detail::buchberger_core<gb_detail::LexCmp>(std::move(gens));
  std::vector<Polynomial<K>> basis;
  basis.reserve(reduced.size());
  for (const auto& v : reduced) {
    basis.push_back(gb_detail::from_engine(v, ideal.ring(), order.perm()));
  }
  return GroebnerBasis<K>(ideal.ring(), order, std::move(basis));
}

/// Remainder of multivariate division by the basis: no term of the result is
/// divisible by any leading term, and the result is 0 iff p lies in the
/// ideal.
template <CoefficientField K>
Polynomial<K> normal_form(const Polynomial<K>& p, const GroebnerBasis<K>& G) {
  require_same_ring(p.ring(), G.ring(), "normal_form");
  std::vector<gb_detail::TermVec<K>> basis;
  basis.reserve(G.basis().size());
  for (const auto& g : G.basis()) {
    basis.push_back(gb_detail::to_engine<gb_detail::LexCmp>(g, G.order().perm()));
  }
  auto r = gb_detail::reduce_full<gb_detail::LexCmp>(
      gb_detail::to_engine<gb_detail::LexCmp>(p, G.order().perm()), basis);
  return gb_detail::from_engine(r, p.ring(), G.order().perm());
}

/// Basis elements lying in the subring of the kept variables. For an
/// elimination-order basis these generate the elimination ideal.
template <CoefficientField K>
std::vector<Polynomial<K>> kept_basis_part(const GroebnerBasis<K>& G,
                                           std::span<const std::size_t> keep) {
  std::vector<bool> kept(G.ring()->nvars(), false);
  for (std::size_t v : keep) kept[v] = true;
  std::vector<Polynomial<K>> inside;
  for (const auto& g : G.basis()) {
    bool ok = true;
    for (const auto& [m, c] : g.terms()) {
      for (std::size_t v = 0; v < m.nvars() && ok; ++v) {
        if (m.exp(v) != 0 && !kept[v]) ok = false;
      }
      if (!ok) break;
    }
    if (ok) inside.push_back(g);
  }
  return inside;
}

/// Intersection of the ideal with the subring in the kept variables, read
/// off a lex basis with the eliminated variables ordered first. Returns the
/// explicit zero ideal when the intersection is trivial.
template <CoefficientField K>
Ideal<K> elimination_ideal(const Ideal<K>& ideal,
                           std::span<const std::size_t> keep) {
  if (keep.empty() || keep.size() >= ideal.ring()->nvars()) {
    throw std::invalid_argument(
        "elimination_ideal: keep must be a proper nonempty subset");
  }
  if (ideal.is_zero_ideal()) return Ideal<K>::zero_ideal(ideal.ring());
  MonomialOrder order = MonomialOrder::elimination(*ideal.ring(), keep);
  GroebnerBasis<K> G = buchberger(ideal, order);
  auto inside = kept_basis_part(G, keep);
  if (inside.empty()) return Ideal<K>::zero_ideal(ideal.ring());
  return Ideal<K>(ideal.ring(), std::move(inside));
}

/// True iff for every variable some basis leading term is a pure power of
/// it (the unit monomial qualifies for all, so the unit ideal passes).
template <CoefficientField K>
bool is_zero_dimensional(const GroebnerBasis<K>& G) {
  const std::size_t n = G.ring()->nvars();
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& lm : G.leading_monomials()) {
      if (lm.is_pure_power_of(v)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace gb_detail {

inline std::optional<std::uint64_t> count_standard(
    const std::vector<Monomial>& lms, std::size_t level, std::size_t nvars) {
  // An all-zero residual divides the chosen prefix: nothing is standard here.
  for (const auto& lm : lms) {
    bool zero = true;
    for (std::size_t v = level; v < nvars && zero; ++v) {
      if (lm.exp(v) != 0) zero = false;
    }
    if (zero) return 0;
  }
  if (level == nvars) return 1;

  std::optional<std::uint64_t> bound;
  for (const auto& lm : lms) {
    bool pure = lm.exp(level) > 0;
    for (std::size_t v = level + 1; v < nvars && pure; ++v) {
      if (lm.exp(v) != 0) pure = false;
    }
    if (pure && (!bound || lm.exp(level) < *bound)) bound = lm.exp(level);
  }
  if (!bound) return std::nullopt;  // unbounded in this variable

  std::uint64_t total = 0;
  for (std::uint64_t e = 0; e < *bound; ++e) {
    std::vector<Monomial> next;
    for (const auto& lm : lms) {
      if (lm.exp(level) <= e) next.push_back(lm);
    }
    auto sub = count_standard(next, level + 1, nvars);
    if (!sub) return std::nullopt;
    total += *sub;
  }
  return total;
}

}  // namespace gb_detail

/// Number of standard monomials (monomials divisible by no basis leading
/// term); INFINITE when the ideal is not zero-dimensional. For
/// zero-dimensional ideals this is the sum of local multiplicities over all
/// geometric points, and it does not depend on the order used.
template <CoefficientField K>
QuotientDimension quotient_dimension(const GroebnerBasis<K>& G) {
  if (!is_zero_dimensional(G)) return QuotientDimension::infinite();
  std::vector<Monomial> lms;
  lms.reserve(G.leading_monomials().size());
  for (const auto& lm : G.leading_monomials()) {
    lms.push_back(lm.permuted(G.order().perm()));
  }
  auto n = gb_detail::count_standard(lms, 0, G.ring()->nvars());
  return n ? QuotientDimension::finite(*n) : QuotientDimension::infinite();
}

/// Integrity check used by the acceptance run: the basis is reduced, every
/// original generator reduces to zero, and every S-polynomial reduces to
/// zero.
template <CoefficientField K>
bool verify_groebner(const Ideal<K>& ideal, const GroebnerBasis<K>& G) {
  if (ideal.is_zero_ideal()) return G.basis().empty();
  std::vector<gb_detail::TermVec<K>> basis;
  for (const auto& g : G.basis()) {
    basis.push_back(gb_detail::to_engine<gb_detail::LexCmp>(g, G.order().perm()));
  }
  // Reducedness: monic leads, and no term divisible by another lead.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].empty() || !basis[i].front().second.is_one()) return false;
    for (const auto& [m, c] : basis[i]) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j == i) continue;
        if (basis[j].front().first.divides(m)) return false;
      }
    }
  }
  for (const auto& g : ideal.generators()) {
    auto r = gb_detail::reduce_full<gb_detail::LexCmp>(
        gb_detail::to_engine<gb_detail::LexCmp>(g, G.order().perm()), basis);
    if (!r.empty()) return false;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto r = gb_detail::reduce_full<gb_detail::LexCmp>(
          gb_detail::s_poly<gb_detail::LexCmp>(basis[i], basis[j]), basis);
      if (!r.empty()) return false;
    }
  }
  return true;
}

}  // namespace planemap
