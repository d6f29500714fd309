#pragma once

#include <json.hpp>

#include <vector>

#include "axiocat/core/axioms.hpp"

namespace axiocat {

// Reports use 1-based object and category indices, ascending.
inline nlohmann::json one_based(const std::vector<std::size_t>& indices) {
  auto out = nlohmann::json::array();
  for (auto i : indices) out.push_back(i + 1);
  return out;
}

inline nlohmann::json to_json(const UcrReport& r) {
  nlohmann::json j;
  j["assignment"] = r.assignment.holds;
  j["inner"] = to_string(r.inner);
  j["inner_distance"] = r.inner_distance ? nlohmann::json(*r.inner_distance) : nlohmann::json(nullptr);
  j["inner_metric"] = "euclidean over canonicalized parameters";
  j["referring"] = r.referring.holds;
  if (r.memberships) j["memberships"] = r.memberships->holds;
  j["holds"] = r.holds();
  return j;
}

inline nlohmann::json to_json(const AxiomReport& r) {
  nlohmann::json j;
  j["ss"] = r.ss.holds;
  j["cs"] = r.cs.holds;
  j["ce"] = r.ce.holds;
  j["ucr"] = r.ucr ? to_json(*r.ucr) : nlohmann::json(nullptr);
  j["boundary"] = one_based(r.boundary);
  nlohmann::json w;
  w["ss"] = one_based(r.ss.witnesses);
  w["cs"] = one_based(r.cs.witnesses);
  w["ce"] = one_based(r.ce.witnesses);
  if (r.ucr) {
    w["ucr_assignment"] = one_based(r.ucr->assignment.witnesses);
    w["ucr_referring"] = one_based(r.ucr->referring.witnesses);
    if (r.ucr->memberships) w["ucr_memberships"] = one_based(r.ucr->memberships->witnesses);
  }
  j["witnesses"] = w;
  return j;
}

}  // namespace axiocat
