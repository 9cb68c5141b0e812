#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "planemap/certificate_json.hpp"
#include "planemap/certify.hpp"

namespace planemap {

/// Exit codes: 0 success / GENERIC, 1 NOT_MAXIMAL (or count below maximum),
/// 2 INDETERMINATE / degenerate input, 3 usage or parse error.
struct CliOutcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Builds a validated mapping from user text. Variable names are fixed to
/// x, y; the 6-variable node ring is internal and never user-visible.
template <CoefficientField K>
MappingPair<K> parse_mapping(const FieldSpec& spec, const std::string& f_text,
                             const std::string& g_text, std::int64_t d1,
                             std::int64_t d2) {
  RingPtr ring = Ring::make({"x", "y"}, spec);
  Polynomial<K> f = parse_polynomial<K>(ring, f_text);
  Polynomial<K> g = parse_polynomial<K>(ring, g_text);
  return MappingPair<K>(std::move(f), std::move(g), d1, d2);
}

namespace cli_detail {

struct Args {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::string field = "fp";
  std::uint64_t prime = 0;  // 0: sample from the default window
  std::string seed_text;
  int retries = 5;
  int budget = 50;
  int prime_count = 2;
  bool json = false;
  std::string f_text, g_text, file;
};

inline std::uint64_t resolve_seed(const std::string& text) {
  if (text.empty()) return kDefaultSeed;
  if (text == "random") return std::random_device{}();
  std::size_t pos = 0;
  std::uint64_t seed = std::stoull(text, &pos);
  if (pos != text.size()) {
    throw CLI::ValidationError("--seed", "expected an integer or 'random'");
  }
  return seed;
}

inline void load_mapping_text(Args& a) {
  if (!a.file.empty()) {
    if (!a.f_text.empty() || !a.g_text.empty()) {
      throw CLI::ValidationError("--file", "give either --file or -f/-g");
    }
    std::ifstream in(a.file);
    if (!in) throw CLI::ValidationError("--file", "cannot open " + a.file);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line) && lines.size() < 2) {
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      lines.push_back(line);
    }
    if (lines.size() != 2) {
      throw CLI::ValidationError(
          "--file", "expected two non-empty lines (f then g)");
    }
    a.f_text = lines[0];
    a.g_text = lines[1];
  }
  if (a.f_text.empty() || a.g_text.empty()) {
    throw CLI::ValidationError("-f/-g", "a mapping is required");
  }
}

/// fp mode: explicit prime or one sampled from the window, deterministically
/// from the seed.
inline FieldSpec resolve_field(const Args& a, std::uint64_t seed) {
  if (a.field == "q") {
    if (a.prime != 0) {
      throw CLI::ValidationError("--prime", "only valid with --field fp");
    }
    return FieldSpec::rationals();
  }
  if (a.field != "fp") {
    throw CLI::ValidationError("--field", "expected 'q' or 'fp'");
  }
  if (a.prime != 0) return FieldSpec::prime_field(a.prime);
  Rng rng(derive_seed(seed, seed_stream::kPrime));
  return FieldSpec::prime_field(random_prime(rng));
}

inline CliOutcome run_formulas(const Args& a) {
  DegreeBounds b = formulas(a.d1, a.d2);
  std::ostringstream os;
  if (a.json) {
    nlohmann::json j;
    j["d1"] = std::to_string(a.d1);
    j["d2"] = std::to_string(a.d2);
    j["c"] = std::to_string(b.c_max);
    j["n"] = std::to_string(b.n_max);
    j["R"] = std::to_string(b.R);
    j["D"] = std::to_string(b.D);
    j["certifiable"] = b.certifiable;
    os << j.dump(2) << "\n";
  } else {
    os << "d1 = " << a.d1 << ", d2 = " << a.d2 << "\n"
       << "c(d1,d2) = " << b.c_max << "   (max cusps)\n"
       << "n(d1,d2) = " << b.n_max << "   (max nodes)\n"
       << "R = " << b.R << "   (deg of the critical curve)\n"
       << "D = " << b.D << "   (deg of the discriminant)\n";
    if (!b.certifiable) {
      os << "note: d1*d2 <= 2, outside the certification range\n";
    }
  }
  return {0, os.str(), ""};
}

template <CoefficientField K>
CliOutcome run_count(const Args& a, const FieldSpec& spec, std::uint64_t seed,
                     bool cusps) {
  MappingPair<K> F = parse_mapping<K>(spec, a.f_text, a.g_text, a.d1, a.d2);
  DegreeBounds b = formulas(a.d1, a.d2);
  CertifyOptions opts{seed, a.retries};
  EvidenceRecord rec;
  rec.field = spec;
  rec.seed = seed;

  bool ok;
  std::int64_t found, maximum;
  std::optional<std::uint64_t> total;
  if (cusps) {
    ok = certify_detail::cusp_side(F, opts, b.c_max, rec);
    found = rec.c_found;
    maximum = b.c_max;
    for (const auto& at : rec.cusp_attempts) {
      if (at.total) total = at.total;
      // The eliminant-based count is defined even when the ideal is not
      // zero-dimensional; surface it rather than the -1 sentinel.
      found = std::max(found, at.distinct);
    }
  } else {
    ok = certify_detail::node_side(F, opts, b.n_max, rec);
    found = rec.n_found;
    maximum = b.n_max;
    for (const auto& at : rec.node_attempts) {
      if (at.ordered_pair_multiplicity) total = at.ordered_pair_multiplicity;
      found = std::max(found, at.distinct);
    }
  }
  const char* kind = cusps ? "cusp" : "node";
  const char* total_name =
      cusps ? "total multiplicity" : "ordered pair multiplicity";

  std::ostringstream os;
  if (a.json) {
    nlohmann::json j;
    j["kind"] = kind;
    j["field"] = spec.str();
    j["seed"] = std::to_string(seed);
    j["distinct"] = std::to_string(found);
    j["total"] = total ? std::to_string(*total) : std::string("INFINITE");
    j["maximum"] = std::to_string(maximum);
    j["attempts"] = std::to_string(
        cusps ? rec.cusp_attempts.size() : rec.node_attempts.size());
    os << j.dump(2) << "\n";
  } else {
    os << "field: " << spec.str()
       << (spec.is_rationals() ? " (exact)" : " (heuristic)") << "\n"
       << "distinct " << kind << "s (max over "
       << (cusps ? rec.cusp_attempts.size() : rec.node_attempts.size())
       << " randomizations): " << found << "\n"
       << total_name << ": " << (total ? std::to_string(*total) : "INFINITE")
       << "\n"
       << "formula maximum: " << maximum << "\n";
  }
  if (!ok) return {2, os.str(), "ideal is not zero-dimensional\n"};
  return {found == maximum ? 0 : 1, os.str(), ""};
}

template <CoefficientField K>
CliOutcome run_certify(const Args& a, const FieldSpec& spec,
                       std::uint64_t seed) {
  MappingPair<K> F = parse_mapping<K>(spec, a.f_text, a.g_text, a.d1, a.d2);
  CertifyOptions opts{seed, a.retries};
  GenericityCertificate cert = certify(F, opts);

  std::ostringstream os;
  if (a.json) {
    os << certificate_to_json_string(cert);
  } else {
    os << "mapping: f = " << cert.f_text << "\n"
       << "         g = " << cert.g_text << "\n"
       << "degrees: (" << cert.d1 << ", " << cert.d2 << ")  field: "
       << cert.field << (cert.exact_mode ? " (exact)" : " (heuristic)")
       << "\n"
       << "cusps: " << cert.c_found << " / " << cert.c_max
       << "   nodes: " << cert.n_found << " / " << cert.n_max << "\n"
       << "verdict: " << to_string(cert.verdict) << "\n";
  }
  int code = cert.verdict == Verdict::GENERIC       ? 0
             : cert.verdict == Verdict::NOT_MAXIMAL ? 1
                                                    : 2;
  return {code, os.str(), ""};
}

inline CliOutcome run_search(const Args& a, std::uint64_t seed) {
  SearchConfig cfg;
  cfg.d1 = a.d1;
  cfg.d2 = a.d2;
  cfg.seed = seed;
  cfg.budget = a.budget;
  cfg.retries = a.retries;
  cfg.prime_count = a.prime_count;
  if (a.field == "q") {
    if (a.prime != 0) {
      throw CLI::ValidationError("--prime", "only valid with --field fp");
    }
    cfg.screen_kind = FieldKind::rationals;
  } else if (a.field == "fp") {
    cfg.screen_kind = FieldKind::prime_field;
    if (a.prime != 0) cfg.explicit_prime = a.prime;
  } else {
    throw CLI::ValidationError("--field", "expected 'q' or 'fp'");
  }
  SearchResult res = search_generic(cfg);

  std::ostringstream os;
  if (a.json) {
    nlohmann::json j = to_json(res.certificate);
    j["candidates_tried"] = std::to_string(res.candidates_tried);
    os << j.dump(2) << "\n";
  } else {
    os << "found after " << res.candidates_tried << " candidate(s):\n"
       << "  f = " << res.certificate.f_text << "\n"
       << "  g = " << res.certificate.g_text << "\n"
       << "cusps: " << res.certificate.c_found << " / "
       << res.certificate.c_max << "   nodes: " << res.certificate.n_found
       << " / " << res.certificate.n_max << "\n"
       << "verdict: " << to_string(res.certificate.verdict) << " ("
       << res.certificate.field << ")\n";
  }
  return {0, os.str(), ""};
}

}  // namespace cli_detail

/// Drives one CLI invocation; never prints, never exits. `args` excludes the
/// program name.
inline CliOutcome run_cli(const std::vector<std::string>& args) {
  using cli_detail::Args;
  CLI::App app{"exact cusp/node counts and generic-type certification for "
               "polynomial plane mappings"};
  app.require_subcommand(1);
  Args a;

  auto add_degrees = [&](CLI::App* cmd) {
    cmd->add_option("--d1", a.d1, "degree bound for f")->required();
    cmd->add_option("--d2", a.d2, "degree bound for g")->required();
  };
  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", a.field, "coefficient field: q or fp")
        ->default_val("fp");
    cmd->add_option("--prime", a.prime,
                    "explicit prime for fp mode (default: sampled from the "
                    "window, see PLANEMAP_PRIME_MIN/MAX)");
    cmd->add_option("--seed", a.seed_text,
                    "RNG seed (integer, or 'random' for entropy)");
    cmd->add_option("--retries", a.retries,
                    "randomized retries per count")->default_val(5);
  };
  auto add_mapping = [&](CLI::App* cmd) {
    cmd->add_option("-f", a.f_text, "polynomial f in x, y");
    cmd->add_option("-g", a.g_text, "polynomial g in x, y");
    cmd->add_option("--file", a.file,
                    "read f and g from a file (two non-comment lines)");
  };

  CLI::App* formulas_cmd =
      app.add_subcommand("formulas", "closed-form maxima and degree data");
  add_degrees(formulas_cmd);
  formulas_cmd->add_flag("--json", a.json, "JSON output");

  CLI::App* cusps_cmd =
      app.add_subcommand("cusps", "count generalized cusps of a mapping");
  add_degrees(cusps_cmd);
  add_field(cusps_cmd);
  add_mapping(cusps_cmd);
  cusps_cmd->add_flag("--json", a.json, "JSON output");

  CLI::App* nodes_cmd =
      app.add_subcommand("nodes", "count generalized nodes of a mapping");
  add_degrees(nodes_cmd);
  add_field(nodes_cmd);
  add_mapping(nodes_cmd);
  nodes_cmd->add_flag("--json", a.json, "JSON output");

  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "certify generic topological type via cusp/node maxima");
  add_degrees(certify_cmd);
  add_field(certify_cmd);
  add_mapping(certify_cmd);
  certify_cmd->add_flag("--json", a.json, "JSON output");

  CLI::App* search_cmd = app.add_subcommand(
      "search", "probabilistic search for a generic mapping");
  add_degrees(search_cmd);
  add_field(search_cmd);
  search_cmd->add_option("--budget", a.budget, "max candidates")
      ->default_val(50);
  search_cmd->add_option("--primes", a.prime_count,
                         "screening primes per candidate")
      ->default_val(2);
  search_cmd->add_flag("--json", a.json, "JSON output");

  std::vector<const char*> argv;
  argv.push_back("planemap");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return {0, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {3, "", std::string(e.what()) + "\n"};
  }

  try {
    const std::uint64_t seed = cli_detail::resolve_seed(a.seed_text);
    if (formulas_cmd->parsed()) return cli_detail::run_formulas(a);

    if (search_cmd->parsed()) return cli_detail::run_search(a, seed);

    cli_detail::load_mapping_text(a);
    FieldSpec spec = cli_detail::resolve_field(a, seed);
    const bool is_q = spec.is_rationals();
    if (cusps_cmd->parsed()) {
      return is_q ? cli_detail::run_count<Rational>(a, spec, seed, true)
                  : cli_detail::run_count<Fp>(a, spec, seed, true);
    }
    if (nodes_cmd->parsed()) {
      return is_q ? cli_detail::run_count<Rational>(a, spec, seed, false)
                  : cli_detail::run_count<Fp>(a, spec, seed, false);
    }
    if (certify_cmd->parsed()) {
      return is_q ? cli_detail::run_certify<Rational>(a, spec, seed)
                  : cli_detail::run_certify<Fp>(a, spec, seed);
    }
    return {3, "", "no subcommand\n"};
  } catch (const CLI::ValidationError& e) {
    return {3, "", std::string(e.what()) + "\n"};
  } catch (const ParseError& e) {
    return {3, "", std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    return {3, "", std::string(e.what()) + "\n"};
  } catch (const DegenerateMappingError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const CurveLocusError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const SmallCharacteristicError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const BudgetExhaustedError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return {2, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

inline int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliOutcome res = run_cli(args);
  if (!res.out.empty()) std::fputs(res.out.c_str(), stdout);
  if (!res.err.empty()) std::fputs(res.err.c_str(), stderr);
  return res.exit_code;
}

}  // namespace planemap
