#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "planemap/field.hpp"
#include "planemap/monomial.hpp"
#include "planemap/ring.hpp"

namespace planemap {

/// Sparse multivariate polynomial over an exact field. Terms are kept in a
/// map ordered by descending plain lex (ring variable sequence), so iteration
/// and printing are canonical. No stored coefficient is zero; the zero
/// polynomial has an empty term map.
template <CoefficientField K>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, K, LexGreater>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    check_ring(*ring_);
  }

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->nvars()), c);
    return p;
  }

  static Polynomial constant_int(RingPtr ring, std::int64_t n) {
    K c = coeff_from_int<K>(n, ring->field());
    return constant(std::move(ring), c);
  }

  static Polynomial variable(RingPtr ring, std::size_t var,
                             std::uint32_t power = 1) {
    Polynomial p(ring);
    if (var >= ring->nvars()) {
      throw std::invalid_argument("Polynomial: unknown variable index");
    }
    Monomial m(ring->nvars());
    m.set_exp(var, power);
    p.terms_.emplace(m, coeff_from_int<K>(1, ring->field()));
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t total_degree() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) {
      d = std::max(d, static_cast<std::int64_t>(m.degree()));
    }
    return d;
  }

  std::int64_t degree_in(std::size_t var) const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) {
      d = std::max(d, static_cast<std::int64_t>(m.exp(var)));
    }
    return d;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }

  const K* coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  /// Leading term in the canonical (ring-sequence lex) order; pre: nonzero.
  const std::pair<const Monomial, K>& leading_term_lex() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return *terms_.begin();
  }

  /// Accumulates c on monomial m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "poly add");
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "poly sub");
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "poly mul");
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        r.add_term(ma * mb, ca * cb);
      }
    }
    return r;
  }

  Polynomial scaled(const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) {
      K v = k * c;
      if (!v.is_zero()) r.terms_.emplace(m, v);
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
      if (a->first != b->first || !(a->second == b->second)) return false;
    }
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Formal partial derivative. Over F_p, exponents reduce mod p and whole
  /// terms may vanish.
  Polynomial differentiate(std::size_t var) const {
    if (var >= ring_->nvars()) {
      throw std::invalid_argument("differentiate: unknown variable");
    }
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
      std::uint32_t e = m.exp(var);
      if (e == 0) continue;
      K nc = c.mul_int(static_cast<std::int64_t>(e));
      if (nc.is_zero()) continue;
      Monomial nm(m);
      nm.set_exp(var, e - 1);
      r.terms_.emplace(nm, nc);
    }
    return r;
  }

  /// Sum of the degree-d terms; zero polynomial when there are none.
  /// Requires total_degree() <= d.
  Polynomial leading_form(std::int64_t d) const {
    if (total_degree() > d) {
      throw std::invalid_argument("leading_form: deg p > d");
    }
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
      if (static_cast<std::int64_t>(m.degree()) == d) r.terms_.emplace(m, c);
    }
    return r;
  }

  /// Scaled so the canonical-lex leading coefficient is 1; zero stays zero.
  Polynomial monic_lex() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.begin()->second.inv());
  }

  /// Ring morphism determined by variable images: variable i of this ring
  /// maps to images[i], a polynomial of the target ring. Coefficients map
  /// identically, so both rings must share the field.
  Polynomial compose(const RingPtr& target,
                     std::span<const Polynomial> images) const {
    if (images.size() != ring_->nvars()) {
      throw std::invalid_argument("compose: one image per variable required");
    }
    if (target->field() != ring_->field()) {
      throw std::invalid_argument("compose: field mismatch");
    }
    // Power cache per variable, grown on demand.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
      auto& cache = powers[v];
      if (cache.empty()) {
        cache.push_back(constant_int(target, 1));
        cache.push_back(images[v]);
      }
      while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
      return cache[e];
    };
    Polynomial result(target);
    for (const auto& [m, c] : terms_) {
      Polynomial term = constant(target, c);
      for (std::size_t v = 0; v < images.size(); ++v) {
        if (m.exp(v) > 0) term = term * power(v, m.exp(v));
      }
      result = result + term;
    }
    return result;
  }

  /// Embedding into another ring: variable i becomes target variable
  /// var_map[i]. Monomials map bijectively, so this is cheap.
  Polynomial map_variables(const RingPtr& target,
                           std::span<const std::size_t> var_map) const {
    if (var_map.size() != ring_->nvars()) {
      throw std::invalid_argument("map_variables: mapping size mismatch");
    }
    if (target->field() != ring_->field()) {
      throw std::invalid_argument("map_variables: field mismatch");
    }
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
      Monomial nm(target->nvars());
      for (std::size_t v = 0; v < var_map.size(); ++v) {
        if (var_map[v] >= target->nvars()) {
          throw std::invalid_argument("map_variables: bad target variable");
        }
        nm.set_exp(var_map[v], m.exp(v));
      }
      r.terms_.emplace(nm, c);
    }
    return r;
  }

  /// Coefficients of this polynomial viewed as univariate in `var`:
  /// result[k] is the coefficient of var^k, a polynomial with var stripped.
  std::vector<Polynomial> coeffs_in(std::size_t var) const {
    std::int64_t d = degree_in(var);
    std::vector<Polynomial> out(static_cast<std::size_t>(d + 1),
                                Polynomial(ring_));
    for (const auto& [m, c] : terms_) {
      Monomial nm(m);
      nm.set_exp(var, 0);
      out[m.exp(var)].terms_.emplace(nm, c);
    }
    return out;
  }

  /// Exact division; nullopt when b does not divide this exactly. Uses
  /// lead-term division in canonical lex, which succeeds iff the division is
  /// exact.
  std::optional<Polynomial> try_divide_exact(const Polynomial& b) const {
    require_same_ring(ring_, b.ring_, "poly divide");
    if (b.is_zero()) return std::nullopt;
    Polynomial rem(*this);
    Polynomial quot(ring_);
    const auto& [bm, bc] = *b.terms_.begin();
    K bc_inv = bc.inv();
    while (!rem.is_zero()) {
      const auto& [rm, rc] = *rem.terms_.begin();
      if (!bm.divides(rm)) return std::nullopt;
      Monomial qm = rm.div(bm);
      K qc = rc * bc_inv;
      quot.terms_.emplace(qm, qc);
      for (const auto& [m, c] : b.terms_) {
        rem.add_term(qm * m, -(qc * c));
      }
    }
    return quot;
  }

 private:
  static void check_ring(const Ring& ring) {
    if (ring.field().kind() != field_kind_of<K>) {
      throw std::invalid_argument(
          "Polynomial: coefficient type does not match ring field");
    }
  }

  RingPtr ring_;
  TermMap terms_;
};

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<Fp>;

}  // namespace planemap
