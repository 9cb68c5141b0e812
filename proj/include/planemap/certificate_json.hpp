#pragma once

#include <json.hpp>

#include "planemap/certify.hpp"

namespace planemap {

/// JSON serialization of certificates. Integer values are decimal strings
/// (they never exceed 64 bits in final counts, but the schema keeps one
/// uniform representation); INFINITE multiplicities serialize as "INFINITE".
/// Key order is alphabetical and therefore byte-stable for a fixed input.

inline nlohmann::json to_json(const InfinityReport& r) {
  nlohmann::json j;
  j["common_point_f1_f2"] = r.common_point_f1_f2;
  j["jacobian_degree_max"] = r.jacobian_degree_max;
  j["critical_curve_smooth"] = r.critical_curve_smooth;
  if (r.common_point_f1_J.has_value()) {
    j["common_point_f1_J"] = *r.common_point_f1_J;
  } else {
    j["common_point_f1_J"] = "n/a";
  }
  return j;
}

inline nlohmann::json to_json(const CuspAttemptInfo& a) {
  nlohmann::json j;
  j["change"] = a.change;
  j["change_seed"] = std::to_string(a.change_seed);
  j["distinct"] = std::to_string(a.distinct);
  j["total"] = a.total ? std::to_string(*a.total) : std::string("INFINITE");
  j["curve_locus"] = a.curve_locus;
  return j;
}

inline nlohmann::json to_json(const NodeAttemptInfo& a) {
  nlohmann::json j;
  j["randomizers"] = a.randomizers;
  j["randomizer_seed"] = std::to_string(a.randomizer_seed);
  j["distinct"] = std::to_string(a.distinct);
  j["ordered_pair_multiplicity"] =
      a.ordered_pair_multiplicity
          ? std::to_string(*a.ordered_pair_multiplicity)
          : std::string("INFINITE");
  j["curve_locus"] = a.curve_locus;
  return j;
}

inline nlohmann::json to_json(const EvidenceRecord& r) {
  nlohmann::json j;
  j["field"] = r.field.str();
  j["prime"] = std::to_string(r.field.characteristic());
  j["seed"] = std::to_string(r.seed);
  j["infinity"] = to_json(r.infinity);
  j["cusp_attempts"] = nlohmann::json::array();
  for (const auto& a : r.cusp_attempts) j["cusp_attempts"].push_back(to_json(a));
  j["node_attempts"] = nlohmann::json::array();
  for (const auto& a : r.node_attempts) j["node_attempts"].push_back(to_json(a));
  j["c_found"] = std::to_string(r.c_found);
  j["n_found"] = std::to_string(r.n_found);
  j["verdict"] = to_string(r.verdict);
  return j;
}

inline nlohmann::json to_json(const GenericityCertificate& c) {
  nlohmann::json j;
  j["schema"] = "planemap-certificate/1";
  j["f"] = c.f_text;
  j["g"] = c.g_text;
  j["d1"] = std::to_string(c.d1);
  j["d2"] = std::to_string(c.d2);
  j["field"] = c.field;
  j["c_max"] = std::to_string(c.c_max);
  j["n_max"] = std::to_string(c.n_max);
  j["c_found"] = std::to_string(c.c_found);
  j["n_found"] = std::to_string(c.n_found);
  j["verdict"] = to_string(c.verdict);
  j["exact_mode"] = c.exact_mode;
  j["seed"] = std::to_string(c.seed);
  j["retries"] = std::to_string(c.retries);
  j["prime_disagreement"] = c.prime_disagreement;
  j["skipped_primes"] = nlohmann::json::array();
  for (const auto& s : c.skipped_primes) {
    nlohmann::json e;
    e["prime"] = std::to_string(s.prime);
    e["reason"] = s.reason;
    j["skipped_primes"].push_back(e);
  }
  j["evidence"] = nlohmann::json::array();
  for (const auto& r : c.evidence) j["evidence"].push_back(to_json(r));
  return j;
}

inline std::string certificate_to_json_string(const GenericityCertificate& c) {
  return to_json(c).dump(2) + "\n";
}

}  // namespace planemap
