// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_REPORT_HPP
#define DISSIPAX_REPORT_HPP

#include <string>
#include <vector>

#include "dissipax/homogenization.hpp"
#include "dissipax/optimizer.hpp"
#include "dissipax/scan.hpp"

namespace dissipax
{

// All report output is byte-deterministic for identical inputs: floats print
// with 17 significant digits ('%.17g', '.' decimal), lines end with '\n'.

/// 17-significant-digit decimal rendering; round-trips doubles exactly.
std::string format_g17(double v);

std::string to_csv(const SpectrumReport &rep);
std::string to_text(const SpectrumReport &rep);

std::string to_csv(const OptimizationTrace &trace);
std::string to_csv(const ConvergenceTable &table);
std::string to_csv(const GapScanResult &scan);
std::string to_text(const DivCurlReport &rep);

/// Design file: documented [design] key = value format with flat arrays.
std::string to_text(const DesignPoint &d);
DesignPoint design_from_text(const std::string &text);

/// Parses a spectrum CSV back into (omega, residual, energy, trace_ratio,
/// pec_defect) rows; numeric fields round-trip exactly.
struct SpectrumCsvRow
{
  double omega_re, omega_im, residual, energy, trace_ratio, pec_defect;
};
std::vector<SpectrumCsvRow> parse_spectrum_csv(const std::string &csv);

/// Writes content to path, throwing IoError on failure.
void write_file(const std::string &path, const std::string &content);
std::string read_file(const std::string &path);

}  // namespace dissipax

#endif  // DISSIPAX_REPORT_HPP
