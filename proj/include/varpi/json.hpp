#pragma once

// JSON renderings for the machine-readable outputs. Requires nlohmann/json.

#include <json.hpp>

#include "varpi/codec.hpp"
#include "varpi/overlap_graph.hpp"
#include "varpi/pi_radix.hpp"
#include "varpi/symmetry.hpp"
#include "varpi/verify.hpp"

namespace varpi {

/// {"n": n, "digits": [alpha_0, ..., alpha_{n-2}], "value": "<decimal>"}
inline nlohmann::json to_json(const PiNumber& x) {
  return {{"n", x.order()}, {"digits", x.digits()}, {"value", decode(x).str()}};
}

inline nlohmann::json to_json(const RankedPermutation& rp) {
  return {{"rank", rp.rank.str()}, {"code", to_json(rp.code)}, {"perm", to_text(rp.perm)}};
}

inline nlohmann::json to_json(const WeightHistogram& h) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [k, c] : h.counts) counts[std::to_string(k)] = c.str();
  return {{"n", h.n}, {"histogram", counts}, {"sum", h.total.str()}};
}

inline nlohmann::json to_json(const PathCertificate& c) {
  return {{"n", c.n},
          {"vertices", c.vertices},
          {"weights", std::vector<unsigned>(c.weights.begin(), c.weights.end())},
          {"total", c.total},
          {"optimal", c.optimal},
          {"closed", c.closed},
          {"stats",
           {{"nodes_expanded", c.stats.nodes_expanded},
            {"bound_cutoffs", c.stats.bound_cutoffs},
            {"budget_exceeded", c.stats.budget_exceeded}}}};
}

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.results) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"n", r.n}, {"passed", !r.any_failed()}, {"checks", checks}};
}

}  // namespace varpi
