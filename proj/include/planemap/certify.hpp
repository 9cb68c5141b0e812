#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "planemap/io.hpp"
#include "planemap/primes.hpp"
#include "planemap/singularity.hpp"

namespace planemap {

enum class Verdict { GENERIC, NOT_MAXIMAL, INDETERMINATE };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::GENERIC: return "GENERIC";
    case Verdict::NOT_MAXIMAL: return "NOT_MAXIMAL";
    case Verdict::INDETERMINATE: return "INDETERMINATE";
  }
  return "?";
}

/// Published runs must reproduce, so seeds default to a fixed constant.
inline constexpr std::uint64_t kDefaultSeed = 1;

struct CertifyOptions {
  std::uint64_t seed = kDefaultSeed;
  int retries = 5;
};

/// Reserved derivation streams; never reuse a tag across purposes.
namespace seed_stream {
inline constexpr std::uint64_t kCusp = 1000;
inline constexpr std::uint64_t kNode = 2000;
inline constexpr std::uint64_t kCandidate = 3000;
inline constexpr std::uint64_t kPrime = 4000;
inline constexpr std::uint64_t kPerPrime = 5000;
}  // namespace seed_stream

/// Field-agnostic attempt records: coefficients are stored printed, counts as
/// integers with nullopt for INFINITE, so certificates from different fields
/// share one type.
struct CuspAttemptInfo {
  std::array<std::string, 4> change;
  std::uint64_t change_seed = 0;
  std::int64_t distinct = -1;
  std::optional<std::uint64_t> total;
  bool curve_locus = false;
};

struct NodeAttemptInfo {
  std::array<std::string, 4> randomizers;  // alpha, beta, a, b
  std::uint64_t randomizer_seed = 0;
  std::int64_t distinct = -1;
  std::optional<std::uint64_t> ordered_pair_multiplicity;
  bool curve_locus = false;
};

/// One complete certification pass over one field.
struct EvidenceRecord {
  FieldSpec field = FieldSpec::rationals();
  std::uint64_t seed = 0;
  InfinityReport infinity;
  std::vector<CuspAttemptInfo> cusp_attempts;
  std::vector<NodeAttemptInfo> node_attempts;
  std::int64_t c_found = -1;  // -1: no zero-dimensional attempt succeeded
  std::int64_t n_found = -1;
  Verdict verdict = Verdict::INDETERMINATE;
};

struct SkippedPrime {
  std::uint64_t prime;
  std::string reason;
};

/// Verdict plus the full evidence trail. Counts never exceed 64 bits; they
/// are serialized as decimal strings regardless.
struct GenericityCertificate {
  std::string f_text, g_text;
  std::int64_t d1 = 0, d2 = 0;
  std::string field;
  std::int64_t c_max = 0, n_max = 0;
  std::int64_t c_found = -1, n_found = -1;
  Verdict verdict = Verdict::INDETERMINATE;
  bool exact_mode = false;
  std::uint64_t seed = 0;
  int retries = 0;
  bool prime_disagreement = false;
  std::vector<SkippedPrime> skipped_primes;
  std::vector<EvidenceRecord> evidence;
};

namespace certify_detail {

template <class K>
std::array<std::string, 4> printed(const std::array<K, 4>& a) {
  return {a[0].str(), a[1].str(), a[2].str(), a[3].str()};
}

/// Cusp counting with retried coordinate changes (identity first), reporting
/// the maximum distinct count (the collision remedy). Stops early when the
/// count is provably exact (distinct == total) or hits the ceiling. Returns
/// whether any attempt saw a zero-dimensional ideal.
template <CoefficientField K>
bool cusp_side(const MappingPair<K>& F, const CertifyOptions& opts,
               std::int64_t c_max, EvidenceRecord& rec) {
  const FieldSpec& spec = F.ring()->field();
  bool ok = false;
  for (int i = 0; i < opts.retries; ++i) {
    const std::uint64_t cs =
        i == 0 ? 0 : derive_seed(opts.seed, seed_stream::kCusp + i);
    LinearChange<K> L = i == 0 ? LinearChange<K>::identity(spec)
                               : LinearChange<K>::random(spec, cs);
    CuspAttemptInfo info;
    info.change = printed(L.m);
    info.change_seed = cs;
    bool stop = false;
    try {
      CuspData<K> cd = count_cusps(F, L);
      info.distinct = cd.distinct;
      if (cd.total_multiplicity.is_finite()) {
        info.total = cd.total_multiplicity.value();
        ok = true;
        rec.c_found = std::max(rec.c_found, cd.distinct);
        if (static_cast<std::uint64_t>(cd.distinct) == *info.total ||
            cd.distinct == c_max) {
          stop = true;
        }
      }
    } catch (const CurveLocusError&) {
      info.curve_locus = true;
    }
    rec.cusp_attempts.push_back(std::move(info));
    if (stop) break;
  }
  return ok;
}

/// Node counting with retried randomizers (plain x-p / f-u defaults first).
/// A below-max count never stops early: a different Rabinowitsch direction
/// can include pairs the default excluded.
template <CoefficientField K>
bool node_side(const MappingPair<K>& F, const CertifyOptions& opts,
               std::int64_t n_max, EvidenceRecord& rec) {
  const FieldSpec& spec = F.ring()->field();
  bool ok = false;
  for (int i = 0; i < opts.retries; ++i) {
    const std::uint64_t ns =
        i == 0 ? 0 : derive_seed(opts.seed, seed_stream::kNode + i);
    NodeRandomizers<K> rnd = i == 0 ? NodeRandomizers<K>::defaults(spec)
                                    : NodeRandomizers<K>::random(spec, ns);
    NodeAttemptInfo info;
    info.randomizers = {rnd.alpha.str(), rnd.beta.str(), rnd.a.str(),
                        rnd.b.str()};
    info.randomizer_seed = ns;
    bool stop = false;
    try {
      NodeData<K> nd = count_nodes(F, rnd);
      info.distinct = nd.distinct;
      if (nd.ordered_pair_multiplicity.is_finite()) {
        info.ordered_pair_multiplicity = nd.ordered_pair_multiplicity.value();
        ok = true;
        rec.n_found = std::max(rec.n_found, nd.distinct);
        if (nd.distinct == n_max) stop = true;
      }
    } catch (const CurveLocusError&) {
      info.curve_locus = true;
    }
    rec.node_attempts.push_back(std::move(info));
    if (stop) break;
  }
  return ok;
}

/// One full pass over one field: infinity checks, then cusp and node counts
/// with retried randomizations. Deterministic per (seed, retry index).
template <CoefficientField K>
EvidenceRecord certify_record(const MappingPair<K>& F,
                              const CertifyOptions& opts) {
  const DegreeBounds bounds = formulas(F.d1, F.d2);

  EvidenceRecord rec;
  rec.field = F.ring()->field();
  rec.seed = opts.seed;
  rec.infinity = infinity_checks(F);  // throws on J == 0

  bool cusp_ok = cusp_side(F, opts, bounds.c_max, rec);
  bool node_ok = node_side(F, opts, bounds.n_max, rec);

  if (!cusp_ok || !node_ok) {
    rec.verdict = Verdict::INDETERMINATE;
  } else if (rec.c_found == bounds.c_max && rec.n_found == bounds.n_max) {
    rec.verdict = Verdict::GENERIC;
  } else {
    rec.verdict = Verdict::NOT_MAXIMAL;
  }
  return rec;
}

template <CoefficientField K>
void fill_header(GenericityCertificate& cert, const MappingPair<K>& F,
                 const CertifyOptions& opts) {
  const DegreeBounds bounds = formulas(F.d1, F.d2);
  cert.f_text = to_string(F.f);
  cert.g_text = to_string(F.g);
  cert.d1 = F.d1;
  cert.d2 = F.d2;
  cert.c_max = bounds.c_max;
  cert.n_max = bounds.n_max;
  cert.seed = opts.seed;
  cert.retries = opts.retries;
}

}  // namespace certify_detail

/// Certifies one mapping over its own field. GENERIC iff both counts hit the
/// closed-form maxima (counting generalized cusps/nodes suffices: at the
/// maxima they are all simple). Over F_p the verdict is heuristic
/// (exact_mode = false); over Q it is exact.
template <CoefficientField K>
GenericityCertificate certify(const MappingPair<K>& F,
                              const CertifyOptions& opts = {}) {
  if (F.d1 * F.d2 <= 2) {
    throw std::invalid_argument("certify: requires d1*d2 > 2");
  }
  GenericityCertificate cert;
  certify_detail::fill_header(cert, F, opts);
  cert.field = F.ring()->field().str();
  cert.exact_mode = F.ring()->field().is_rationals();

  EvidenceRecord rec = certify_detail::certify_record(F, opts);
  cert.c_found = rec.c_found;
  cert.n_found = rec.n_found;
  cert.verdict = rec.verdict;
  cert.evidence.push_back(std::move(rec));
  return cert;
}

/// Reduction of a rational mapping mod p. Throws when a coefficient
/// denominator is divisible by p (that prime must be skipped).
class PrimeReductionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Polynomial<Fp> reduce_mod(const Polynomial<Rational>& p,
                                 const RingPtr& target) {
  const unsigned long prime =
      static_cast<unsigned long>(target->field().prime());
  Polynomial<Fp> out(target);
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t num = mpz_fdiv_ui(c.num().get_mpz_t(), prime);
    std::uint64_t den = mpz_fdiv_ui(c.den().get_mpz_t(), prime);
    if (den == 0) {
      throw PrimeReductionError(
          "coefficient denominator divisible by screening prime");
    }
    Fp v = Fp(num, target->field().prime()) /
           Fp(den, target->field().prime());
    out.add_term(m, v);
  }
  return out;
}

inline MappingPair<Fp> reduce_mod(const MappingPair<Rational>& F,
                                  std::uint64_t prime) {
  RingPtr target =
      Ring::make(F.ring()->var_names(), FieldSpec::prime_field(prime));
  return MappingPair<Fp>(reduce_mod(F.f, target), reduce_mod(F.g, target),
                         F.d1, F.d2);
}

/// Reduces F mod each prime and certifies there. Consolidated counts take
/// the per-prime maximum (bad reduction can only spuriously lower counts by
/// collision); the consolidated verdict is GENERIC only when at least two
/// primes agree on the maxima, or when a single prime was requested, in
/// which case the certificate stays heuristic exactly like single-field
/// certify. Primes dividing a coefficient denominator or killing J are
/// skipped and reported.
inline GenericityCertificate multi_prime_screen(
    const MappingPair<Rational>& F, std::span<const std::uint64_t> primes,
    const CertifyOptions& opts = {}) {
  if (primes.empty()) {
    throw std::invalid_argument("multi_prime_screen: need at least one prime");
  }
  if (F.d1 * F.d2 <= 2) {
    throw std::invalid_argument("multi_prime_screen: requires d1*d2 > 2");
  }
  GenericityCertificate cert;
  certify_detail::fill_header(cert, F, opts);
  cert.field = "F_p screening (" + std::to_string(primes.size()) + " primes)";
  cert.exact_mode = false;

  for (std::size_t k = 0; k < primes.size(); ++k) {
    const std::uint64_t p = primes[k];
    CertifyOptions per = opts;
    per.seed = derive_seed(opts.seed, seed_stream::kPerPrime + k);
    try {
      MappingPair<Fp> Fp_map = reduce_mod(F, p);
      cert.evidence.push_back(
          certify_detail::certify_record(Fp_map, per));
    } catch (const PrimeReductionError& e) {
      cert.skipped_primes.push_back({p, e.what()});
    } catch (const DegenerateMappingError&) {
      cert.skipped_primes.push_back({p, "J(F) degenerates mod this prime"});
    }
  }

  std::size_t valid = 0, hits = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> counts;
  for (const auto& rec : cert.evidence) {
    if (rec.verdict == Verdict::INDETERMINATE) continue;
    ++valid;
    counts.emplace_back(rec.c_found, rec.n_found);
    cert.c_found = std::max(cert.c_found, rec.c_found);
    cert.n_found = std::max(cert.n_found, rec.n_found);
    if (rec.verdict == Verdict::GENERIC) ++hits;
  }
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] != counts[0]) cert.prime_disagreement = true;
  }

  if (valid == 0) {
    cert.verdict = Verdict::INDETERMINATE;
  } else if (hits >= 2 || (primes.size() == 1 && hits == 1)) {
    cert.verdict = Verdict::GENERIC;
  } else if (hits == 1) {
    cert.verdict = Verdict::INDETERMINATE;  // unconfirmed single hit
  } else {
    cert.verdict = Verdict::NOT_MAXIMAL;
  }
  return cert;
}

struct SearchConfig {
  std::int64_t d1 = 0, d2 = 0;
  std::uint64_t seed = kDefaultSeed;
  int budget = 50;
  FieldKind screen_kind = FieldKind::prime_field;
  std::optional<std::uint64_t> explicit_prime;  // first screening prime
  int prime_count = 2;
  int retries = 5;

  void validate() const {
    if (!(d1 >= d2 && d2 >= 1)) {
      throw std::invalid_argument("search: need d1 >= d2 >= 1");
    }
    if (d1 * d2 <= 2) {
      throw std::invalid_argument("search: requires d1*d2 > 2");
    }
    if (budget < 1) throw std::invalid_argument("search: budget >= 1");
    if (prime_count < 1) throw std::invalid_argument("search: prime_count >= 1");
  }
};

struct SearchResult {
  MappingPair<Rational> mapping;
  GenericityCertificate certificate;
  int candidates_tried = 0;
};

/// Samples random mappings of exact degrees (d1, d2) with integer
/// coefficients, certifies each over the screening field(s), and returns the
/// first GENERIC one. Deterministic in the seed. Genericity is Zariski
/// dense, so budget exhaustion signals an implementation or range problem,
/// not bad luck.
inline SearchResult search_generic(const SearchConfig& cfg) {
  cfg.validate();
  RingPtr ringQ = Ring::make({"x", "y"}, FieldSpec::rationals());

  std::vector<std::uint64_t> primes;
  if (cfg.screen_kind == FieldKind::prime_field) {
    if (cfg.explicit_prime) primes.push_back(*cfg.explicit_prime);
    Rng prng(derive_seed(cfg.seed, seed_stream::kPrime));
    while (primes.size() < static_cast<std::size_t>(cfg.prime_count)) {
      std::uint64_t p = random_prime(prng);
      bool dup = false;
      for (std::uint64_t q : primes) dup = dup || q == p;
      if (!dup) primes.push_back(p);
    }
  }

  for (int cand = 0; cand < cfg.budget; ++cand) {
    Rng rng(derive_seed(cfg.seed, seed_stream::kCandidate + cand));
    auto f = random_polynomial<Rational>(ringQ, cfg.d1, rng);
    auto g = random_polynomial<Rational>(ringQ, cfg.d2, rng);
    MappingPair<Rational> F(std::move(f), std::move(g), cfg.d1, cfg.d2);

    CertifyOptions opts;
    opts.seed = derive_seed(cfg.seed, seed_stream::kCandidate + cand);
    opts.retries = cfg.retries;
    try {
      GenericityCertificate cert =
          cfg.screen_kind == FieldKind::rationals
              ? certify(F, opts)
              : multi_prime_screen(F, primes, opts);
      if (cert.verdict == Verdict::GENERIC) {
        return SearchResult{std::move(F), std::move(cert), cand + 1};
      }
    } catch (const DegenerateMappingError&) {
      // J == 0 for a dense random mapping: essentially impossible, but a
      // candidate is cheap to skip.
    }
  }
  throw BudgetExhaustedError(
      "search_generic: no generic mapping within budget " +
      std::to_string(cfg.budget) +
      " (enlarge the budget or the coefficient range)");
}

}  // namespace planemap
