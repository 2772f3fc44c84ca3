// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_EXPERIMENTS_HPP
#define DISSIPAX_EXPERIMENTS_HPP

#include "dissipax/config.hpp"

namespace dissipax
{

/// Exit codes of the experiment runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitIo = 4;

/// Executes the configured pipeline and writes its artifacts (CSV/report
/// files plus a manifest echoing the config, seed, version, and wall time)
/// under the output directory. Validation is fail-fast: nothing is written
/// until the full configuration has been checked. Returns kExitOk on success;
/// on failure prints a machine-readable error record to stderr and returns
/// the matching exit code.
int run_experiment(const ExperimentConfig &config);

}  // namespace dissipax

#endif  // DISSIPAX_EXPERIMENTS_HPP
