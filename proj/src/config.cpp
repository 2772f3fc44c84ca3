// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/config.hpp"

#include <algorithm>
#include <sstream>

#include "dissipax/report.hpp"

namespace dissipax
{

namespace
{
std::string trim(const std::string &s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

ConfigMap ConfigMap::parse(const std::string &text)
{
  ConfigMap cfg;
  std::istringstream is(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(is, line))
  {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    if (line.front() == '[')
    {
      DX_VERIFY(line.back() == ']', "unterminated section header in config");
      section = trim(line.substr(1, line.size() - 2));
      DX_VERIFY(!section.empty(), "empty section name in config");
      continue;
    }
    const auto eq = line.find('=');
    DX_VERIFY(eq != std::string::npos, "config line is not key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    DX_VERIFY(!key.empty(), "empty config key");
    cfg.values_[section.empty() ? key : section + "." + key] = value;
  }
  return cfg;
}

ConfigMap ConfigMap::load(const std::string &path)
{
  return parse(read_file(path));
}

std::string ConfigMap::get(const std::string &key) const
{
  const auto it = values_.find(key);
  DX_VERIFY(it != values_.end(), "missing config key: " + key);
  return it->second;
}

std::string ConfigMap::get_or(const std::string &key,
                              const std::string &fallback) const
{
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double ConfigMap::get_double(const std::string &key) const
{
  try
  {
    return std::stod(get(key));
  }
  catch (const std::invalid_argument &)
  {
    throw ValidationError("config key is not a number: " + key);
  }
}

double ConfigMap::get_double_or(const std::string &key, double fallback) const
{
  return has(key) ? get_double(key) : fallback;
}

int ConfigMap::get_int(const std::string &key) const
{
  try
  {
    return std::stoi(get(key));
  }
  catch (const std::invalid_argument &)
  {
    throw ValidationError("config key is not an integer: " + key);
  }
}

int ConfigMap::get_int_or(const std::string &key, int fallback) const
{
  return has(key) ? get_int(key) : fallback;
}

std::uint64_t ConfigMap::get_u64_or(const std::string &key,
                                    std::uint64_t fallback) const
{
  if (!has(key))
    return fallback;
  try
  {
    return std::stoull(get(key));
  }
  catch (const std::invalid_argument &)
  {
    throw ValidationError("config key is not an unsigned integer: " + key);
  }
}

std::vector<double> ConfigMap::get_doubles(const std::string &key) const
{
  std::vector<double> out;
  std::istringstream is(get(key));
  std::string tok;
  while (is >> tok)
  {
    try
    {
      out.push_back(std::stod(tok));
    }
    catch (const std::invalid_argument &)
    {
      throw ValidationError("config key is not a number list: " + key);
    }
  }
  return out;
}

std::vector<int> ConfigMap::get_ints(const std::string &key) const
{
  std::vector<int> out;
  for (double v : get_doubles(key))
    out.push_back(static_cast<int>(v));
  return out;
}

void ConfigMap::set(const std::string &key, const std::string &value)
{
  values_[key] = value;
}

std::string ConfigMap::echo() const
{
  std::ostringstream os;
  for (const auto &[k, v] : values_)
    os << k << " = " << v << "\n";
  return os.str();
}

const char *kind_name(ExperimentKind k)
{
  switch (k)
  {
    case ExperimentKind::spectrum:
      return "spectrum";
    case ExperimentKind::gap_scan:
      return "gap_scan";
    case ExperimentKind::hconv_test:
      return "hconv_test";
    case ExperimentKind::eigen_convergence:
      return "eigen_convergence";
    case ExperimentKind::optimize:
      return "optimize";
    case ExperimentKind::closure_check:
      return "closure_check";
  }
  return "unknown";
}

ExperimentKind kind_from_name(const std::string &name)
{
  for (ExperimentKind k :
       {ExperimentKind::spectrum, ExperimentKind::gap_scan,
        ExperimentKind::hconv_test, ExperimentKind::eigen_convergence,
        ExperimentKind::optimize, ExperimentKind::closure_check})
  {
    if (name == kind_name(k))
      return k;
  }
  throw ValidationError("unknown experiment kind: " + name);
}

ExperimentConfig ExperimentConfig::from_map(ConfigMap map)
{
  ExperimentConfig cfg;
  cfg.kind = kind_from_name(map.get("experiment.kind"));
  cfg.out_dir = map.get_or("output.dir", "out");
  cfg.seed = map.get_u64_or("output.seed", 1);
  cfg.threads = map.get_int_or("output.threads", 1);
  DX_VERIFY(cfg.threads >= 1, "threads must be >= 1");
  cfg.raw = std::move(map);
  return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string &path)
{
  return from_map(ConfigMap::load(path));
}

}  // namespace dissipax
