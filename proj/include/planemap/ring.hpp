#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "planemap/field.hpp"
#include "planemap/monomial.hpp"

namespace planemap {

/// A polynomial ring: an ordered list of variable names over a coefficient
/// field. Immutable; shared between the polynomials living in it.
class Ring {
 public:
  Ring(std::vector<std::string> vars, FieldSpec field)
      : vars_(std::move(vars)), field_(field) {
    if (vars_.empty() || vars_.size() > Monomial::kMaxVars) {
      throw std::invalid_argument("Ring: need 1..6 variables");
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (std::size_t j = i + 1; j < vars_.size(); ++j) {
        if (vars_[i] == vars_[j]) {
          throw std::invalid_argument("Ring: duplicate variable " + vars_[i]);
        }
      }
    }
  }

  static std::shared_ptr<const Ring> make(std::vector<std::string> vars,
                                          FieldSpec field) {
    return std::make_shared<const Ring>(std::move(vars), field);
  }

  std::size_t nvars() const { return vars_.size(); }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  const std::vector<std::string>& var_names() const { return vars_; }

  std::optional<std::size_t> var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  const FieldSpec& field() const { return field_; }

  bool operator==(const Ring& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  std::vector<std::string> vars_;
  FieldSpec field_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b,
                              const char* what) {
  if (!same_ring(a, b)) {
    throw std::invalid_argument(std::string(what) + ": ring mismatch");
  }
}

/// Monomial order: lexicographic over a permutation of the ring's variables.
/// perm[0] is the most significant variable. Elimination orders put the
/// variables to be eliminated first.
class MonomialOrder {
 public:
  static MonomialOrder lex(const Ring& ring) {
    std::vector<std::uint32_t> perm(ring.nvars());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    return MonomialOrder(std::move(perm));
  }

  static MonomialOrder lex_permuted(const Ring& ring,
                                    std::vector<std::uint32_t> perm) {
    if (perm.size() != ring.nvars()) {
      throw std::invalid_argument("MonomialOrder: permutation size mismatch");
    }
    std::vector<bool> seen(perm.size(), false);
    for (std::uint32_t v : perm) {
      if (v >= perm.size() || seen[v]) {
        throw std::invalid_argument("MonomialOrder: not a permutation");
      }
      seen[v] = true;
    }
    return MonomialOrder(std::move(perm));
  }

  /// Eliminated variables (not in `keep`) come first in ring sequence, kept
  /// variables last in ring sequence.
  static MonomialOrder elimination(const Ring& ring,
                                   std::span<const std::size_t> keep) {
    std::vector<bool> kept(ring.nvars(), false);
    for (std::size_t v : keep) {
      if (v >= ring.nvars()) {
        throw std::invalid_argument("MonomialOrder: bad kept variable");
      }
      kept[v] = true;
    }
    std::vector<std::uint32_t> perm;
    for (std::uint32_t i = 0; i < ring.nvars(); ++i)
      if (!kept[i]) perm.push_back(i);
    for (std::uint32_t i = 0; i < ring.nvars(); ++i)
      if (kept[i]) perm.push_back(i);
    return MonomialOrder(std::move(perm));
  }

  std::span<const std::uint32_t> perm() const { return perm_; }
  std::size_t nvars() const { return perm_.size(); }

  int compare(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      std::uint32_t ea = a.exp(perm_[i]), eb = b.exp(perm_[i]);
      if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
  }

  bool operator==(const MonomialOrder& o) const { return perm_ == o.perm_; }
  bool operator!=(const MonomialOrder& o) const { return perm_ != o.perm_; }

 private:
  explicit MonomialOrder(std::vector<std::uint32_t> perm)
      : perm_(std::move(perm)) {}
  std::vector<std::uint32_t> perm_;
};

}  // namespace planemap
