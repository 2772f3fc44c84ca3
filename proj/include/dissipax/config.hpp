// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_CONFIG_HPP
#define DISSIPAX_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dissipax/common.hpp"

namespace dissipax
{

/// Line-oriented key = value configuration with [section] headers and '#'
/// comments. Keys are addressed as "section.key".
class ConfigMap
{
public:
  static ConfigMap parse(const std::string &text);
  static ConfigMap load(const std::string &path);

  bool has(const std::string &key) const { return values_.count(key) > 0; }
  std::string get(const std::string &key) const;
  std::string get_or(const std::string &key, const std::string &fallback) const;
  double get_double(const std::string &key) const;
  double get_double_or(const std::string &key, double fallback) const;
  int get_int(const std::string &key) const;
  int get_int_or(const std::string &key, int fallback) const;
  std::uint64_t get_u64_or(const std::string &key, std::uint64_t fallback) const;
  std::vector<double> get_doubles(const std::string &key) const;
  std::vector<int> get_ints(const std::string &key) const;

  void set(const std::string &key, const std::string &value);

  /// Deterministic echo of all entries for the manifest.
  std::string echo() const;

private:
  std::map<std::string, std::string> values_;
};

enum class ExperimentKind
{
  spectrum,
  gap_scan,
  hconv_test,
  eigen_convergence,
  optimize,
  closure_check
};

const char *kind_name(ExperimentKind k);
ExperimentKind kind_from_name(const std::string &name);

/// Fully validated experiment description. Construction performs fail-fast
/// validation of every referenced parameter before any solver work starts.
struct ExperimentConfig
{
  ExperimentKind kind = ExperimentKind::spectrum;
  ConfigMap raw;
  std::string out_dir = "out";
  std::uint64_t seed = 1;
  int threads = 1;

  static ExperimentConfig from_map(ConfigMap map);
  static ExperimentConfig from_file(const std::string &path);
};

}  // namespace dissipax

#endif  // DISSIPAX_CONFIG_HPP
