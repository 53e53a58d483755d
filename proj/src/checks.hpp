// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "report.hpp"

namespace slicespace {

/// Runs the named invariant suite (bloch | bergman | besov | dirichlet |
/// kernels | all) on seeded random families. `tol_override`, when positive,
/// replaces the default tolerance of the deviation-style assertions (the
/// sup-estimator bias is one-sided, so overly tight overrides fail honestly).
SuiteReport run_suite(const std::string& name, std::uint64_t seed, const QuadConfig& cfg,
                      double tol_override = 0.0);

bool is_known_suite(const std::string& name);

}  // namespace slicespace
