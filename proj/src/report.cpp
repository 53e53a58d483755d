// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include <json.hpp>

namespace slicespace {

namespace {

using Json = nlohmann::ordered_json;

Json config_json(const QuadConfig& cfg) {
  Json j;
  j["radial"] = cfg.rule.radial;
  j["angular"] = cfg.rule.angular;
  j["clip"] = cfg.rule.clip;
  j["sphere_samples"] = cfg.sphere_samples;
  j["sup_radial"] = cfg.sup.radial;
  j["sup_angular"] = cfg.sup.angular;
  j["a_grid"] = cfg.a_grid;
  return j;
}

}  // namespace

std::string quad_config_to_json(const QuadConfig& cfg) { return config_json(cfg).dump(); }

std::string NormReport::to_json() const {
  Json j;
  j["space"] = space;
  j["value"] = value;
  auto& axes = j["per_axis"] = Json::array();
  for (const auto& av : per_axis) {
    Json row;
    row["axis"] = {av.axis.q().x, av.axis.q().y, av.axis.q().z};
    row["value"] = av.value;
    axes.push_back(row);
  }
  if (!params.empty()) {
    Json p;
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
  }
  j["config"] = config_json(config);
  return j.dump(2);
}

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string SuiteReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["passed"] = passed();
  j["config"] = config_json(config);
  auto& arr = j["checks"] = Json::array();
  for (const auto& c : checks) {
    Json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    row["lhs"] = c.lhs;
    row["rhs"] = c.rhs;
    row["tolerance"] = c.tolerance;
    if (!c.witness.empty()) row["witness"] = c.witness;
    arr.push_back(row);
  }
  return j.dump(2);
}

}  // namespace slicespace
