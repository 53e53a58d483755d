// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quadrature.hpp"

namespace slicespace {

struct AxisValue {
  Axis axis = Axis::e1();
  double value = 0.0;
};

/// Result of a norm computation: the value, the per-axis slice values that
/// fed the sphere sup, and the numerical configuration it was run with.
struct NormReport {
  std::string space;
  double value = 0.0;
  std::vector<AxisValue> per_axis;
  QuadConfig config;
  std::map<std::string, double> params;  // p, alpha, ... when applicable

  std::string to_json() const;
};

/// One assertion of a check suite.
struct CheckResult {
  std::string name;
  bool pass = true;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  std::string witness;  // empty unless the check failed or reports a probe

  static CheckResult ok(std::string name, double lhs, double rhs, double tol) {
    return CheckResult{std::move(name), true, lhs, rhs, tol, {}};
  }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  QuadConfig config;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_json() const;
};

std::string quad_config_to_json(const QuadConfig& cfg);

}  // namespace slicespace
