// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dissipax
{

std::string format_g17(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace
{
std::string g17(Complex z, const char *sep = ",")
{
  return format_g17(z.real()) + sep + format_g17(z.imag());
}
}  // namespace

std::string to_csv(const SpectrumReport &rep)
{
  std::ostringstream os;
  os << "omega_re,omega_im,residual,energy,trace_ratio,pec_defect\n";
  for (const auto &p : rep.eigenpairs)
  {
    os << g17(p.omega) << "," << format_g17(p.residual) << ","
       << format_g17(p.energy) << "," << format_g17(p.trace_ratio) << ","
       << format_g17(p.pec_defect) << "\n";
  }
  return os.str();
}

std::string to_text(const SpectrumReport &rep)
{
  std::ostringstream os;
  os << "spectrum_report\n";
  os << "shift = " << g17(rep.shift, " ") << "\n";
  os << "requested = " << rep.requested << "\n";
  os << "krylov_dim = " << rep.krylov_dim << "\n";
  os << "iterations = " << rep.iterations << "\n";
  os << "deflated_kernel_dim = " << rep.deflated_kernel_dim << "\n";
  os << "converged = " << (rep.converged ? 1 : 0) << "\n";
  os << "count = " << rep.eigenpairs.size() << "\n";
  int i = 0;
  for (const auto &p : rep.eigenpairs)
  {
    os << "eig[" << i++ << "] = " << g17(p.omega, " ") << " residual "
       << format_g17(p.residual) << " energy " << format_g17(p.energy)
       << " trace_ratio " << format_g17(p.trace_ratio) << " pec_defect "
       << format_g17(p.pec_defect) << " cluster " << p.cluster << "\n";
  }
  return os.str();
}

std::string to_csv(const OptimizationTrace &trace)
{
  std::ostringstream os;
  os << "iter,dI,omega_re,omega_im\n";
  for (const auto &r : trace.records)
  {
    os << r.iteration << "," << format_g17(r.value) << "," << g17(r.omega) << "\n";
  }
  return os.str();
}

std::string to_csv(const ConvergenceTable &table)
{
  std::ostringstream os;
  os << "n,omega_re,omega_im,gap,residual\n";
  for (const auto &r : table.rows)
  {
    os << r.periods << "," << g17(r.omega) << "," << format_g17(r.gap) << ","
       << format_g17(r.residual) << "\n";
  }
  return os.str();
}

std::string to_csv(const GapScanResult &scan)
{
  std::ostringstream os;
  os << "trial,min_abs_omega,omega_re,omega_im,ok\n";
  for (const auto &r : scan.records)
  {
    os << r.trial << "," << format_g17(r.min_abs_omega) << "," << g17(r.omega)
       << "," << (r.ok ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string to_text(const DivCurlReport &rep)
{
  std::ostringstream os;
  os << "divcurl_report\n";
  os << "candidate_upper_triangle =";
  for (double v : rep.candidate.upper_triangle())
    os << " " << format_g17(v);
  os << "\n";
  os << "residual = " << format_g17(rep.residual) << "\n";
  os << "tol = " << format_g17(rep.tol) << "\n";
  os << "pass = " << (rep.pass ? 1 : 0) << "\n";
  os << "corrector_jump_defect = " << format_g17(rep.corrector_jump_defect) << "\n";
  for (int c = 0; c < 3; ++c)
  {
    os << "e_limit[" << c << "] =";
    for (int i = 0; i < 3; ++i)
      os << " " << format_g17(rep.e_limit(i, c));
    os << "\n";
    os << "d_limit[" << c << "] =";
    for (int i = 0; i < 3; ++i)
      os << " " << format_g17(rep.d_limit(i, c));
    os << "\n";
  }
  return os.str();
}

std::string to_text(const DesignPoint &d)
{
  std::ostringstream os;
  os << "[design]\n";
  os << "grid = " << d.nx << " " << d.ny << " " << d.nz << "\n";
  os << "eps1 = " << format_g17(d.eps1) << "\n";
  os << "eps2 = " << format_g17(d.eps2) << "\n";
  os << "encoding = " << (d.explicit_tensors ? "tensors" : "laminate") << "\n";
  if (d.explicit_tensors)
  {
    os << "tensors =";
    for (const auto &t : d.tensors)
      for (double v : t.upper_triangle())
        os << " " << format_g17(v);
    os << "\n";
  }
  else
  {
    os << "theta =";
    for (double t : d.theta)
      os << " " << format_g17(t);
    os << "\n";
    os << "axis =";
    for (int a : d.axis)
      os << " " << a;
    os << "\n";
  }
  return os.str();
}

namespace
{
std::vector<std::string> split_ws(const std::string &s)
{
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok)
    out.push_back(tok);
  return out;
}
}  // namespace

DesignPoint design_from_text(const std::string &text)
{
  DesignPoint d;
  std::istringstream is(text);
  std::string line;
  bool in_design = false;
  std::string encoding = "laminate";
  while (std::getline(is, line))
  {
    if (line == "[design]")
    {
      in_design = true;
      continue;
    }
    if (!in_design || line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      continue;
    std::string key = line.substr(0, eq);
    while (!key.empty() && key.back() == ' ')
      key.pop_back();
    const auto vals = split_ws(line.substr(eq + 1));
    if (key == "grid")
    {
      DX_VERIFY(vals.size() == 3, "design grid needs three dims");
      d.nx = std::stoi(vals[0]);
      d.ny = std::stoi(vals[1]);
      d.nz = std::stoi(vals[2]);
    }
    else if (key == "eps1")
      d.eps1 = std::stod(vals.at(0));
    else if (key == "eps2")
      d.eps2 = std::stod(vals.at(0));
    else if (key == "encoding")
      encoding = vals.at(0);
    else if (key == "theta")
    {
      d.theta.clear();
      for (const auto &v : vals)
        d.theta.push_back(std::stod(v));
    }
    else if (key == "axis")
    {
      d.axis.clear();
      for (const auto &v : vals)
        d.axis.push_back(std::stoi(v));
    }
    else if (key == "tensors")
    {
      DX_VERIFY(vals.size() % 6 == 0, "tensor array length must be 6 per cell");
      d.tensors.clear();
      for (std::size_t i = 0; i + 6 <= vals.size(); i += 6)
      {
        std::array<double, 6> u{};
        for (int j = 0; j < 6; ++j)
          u[static_cast<std::size_t>(j)] = std::stod(vals[i + j]);
        d.tensors.push_back(MaterialTensor::from_upper_triangle(u));
      }
    }
  }
  d.explicit_tensors = encoding == "tensors";
  if (d.explicit_tensors && d.theta.empty())
    d.theta.assign(d.n_cells(), 0.5);
  if (d.axis.empty() && !d.explicit_tensors)
    d.axis.assign(d.n_cells(), 0);
  d.validate();
  return d;
}

std::vector<SpectrumCsvRow> parse_spectrum_csv(const std::string &csv)
{
  std::vector<SpectrumCsvRow> rows;
  std::istringstream is(csv);
  std::string line;
  bool header = true;
  while (std::getline(is, line))
  {
    if (header)
    {
      header = false;
      continue;
    }
    if (line.empty())
      continue;
    SpectrumCsvRow row{};
    double *fields[6] = {&row.omega_re, &row.omega_im,   &row.residual,
                         &row.energy,   &row.trace_ratio, &row.pec_defect};
    std::istringstream ls(line);
    std::string tok;
    for (int i = 0; i < 6; ++i)
    {
      DX_VERIFY(std::getline(ls, tok, ','), "spectrum CSV row too short");
      *fields[i] = std::stod(tok);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_file(const std::string &path, const std::string &content)
{
  std::ofstream os(path, std::ios::binary);
  if (!os)
  {
    throw IoError("cannot open for writing: " + path);
  }
  os.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!os)
  {
    throw IoError("write failed: " + path);
  }
}

std::string read_file(const std::string &path)
{
  std::ifstream is(path, std::ios::binary);
  if (!is)
  {
    throw IoError("cannot open for reading: " + path);
  }
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace dissipax
