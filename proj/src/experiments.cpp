// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/experiments.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "dissipax/report.hpp"

namespace dissipax
{

namespace
{

int log_level()
{
  const char *env = std::getenv("DISSIPAX_LOG");
  if (env == nullptr)
    return 1;  // info
  const std::string v(env);
  if (v == "error")
    return 0;
  if (v == "debug")
    return 2;
  return 1;
}

void log_info(const std::string &msg)
{
  if (log_level() >= 1)
    std::cerr << "[dissipax] " << msg << "\n";
}

std::shared_ptr<const BoxMesh> build_mesh(const ConfigMap &cfg)
{
  const int nx = cfg.get_int("mesh.nx");
  const int ny = cfg.get_int("mesh.ny");
  const int nz = cfg.get_int("mesh.nz");
  const double lx = cfg.get_double("mesh.lx");
  const double ly = cfg.get_double("mesh.ly");
  const double lz = cfg.get_double("mesh.lz");
  return std::make_shared<BoxMesh>(nx, ny, nz, lx, ly, lz);
}

ImpedanceSpec build_impedance(const ConfigMap &cfg)
{
  const std::string variant = cfg.get_or("impedance.variant", "scalar");
  if (variant == "pec")
    return ImpedanceSpec::pec();
  if (variant == "scalar")
  {
    const Complex a(cfg.get_double_or("impedance.a_re", 1.0),
                    cfg.get_double_or("impedance.a_im", 0.0));
    return ImpedanceSpec::scalar_constant(a,
                                          cfg.get_double_or("impedance.delta", 1e-3));
  }
  if (variant == "per_face")
  {
    const auto re = cfg.get_doubles("impedance.faces_re");
    DX_VERIFY(re.size() == 6, "impedance.faces_re needs six values");
    std::vector<double> im(6, 0.0);
    if (cfg.has("impedance.faces_im"))
    {
      im = cfg.get_doubles("impedance.faces_im");
      DX_VERIFY(im.size() == 6, "impedance.faces_im needs six values");
    }
    std::array<Complex, 6> a;
    for (int i = 0; i < 6; ++i)
      a[static_cast<std::size_t>(i)] = Complex(re[i], im[i]);
    return ImpedanceSpec::per_face_scalar(a,
                                          cfg.get_double_or("impedance.delta", 1e-3));
  }
  if (variant == "selfadjoint_ic")
  {
    const std::string sign = cfg.get_or("impedance.sign", "-");
    DX_VERIFY(sign == "+" || sign == "-", "impedance.sign must be + or -");
    return ImpedanceSpec::selfadjoint_ic(cfg.get_double_or("impedance.c", 1.0),
                                         sign == "+" ? 1 : -1);
  }
  throw ValidationError("unknown impedance variant: " + variant);
}

LaminateSpec build_laminate(const ConfigMap &cfg, const std::string &section)
{
  LaminateSpec spec;
  spec.eps1 = cfg.get_double(section + ".eps1");
  spec.eps2 = cfg.get_double(section + ".eps2");
  spec.theta = cfg.get_double(section + ".theta");
  const std::string axis = cfg.get_or(section + ".normal", "x");
  DX_VERIFY(axis == "x" || axis == "y" || axis == "z",
            "laminate normal must be x, y, or z");
  spec.normal_axis = axis == "x" ? 0 : (axis == "y" ? 1 : 2);
  spec.periods = cfg.get_int_or(section + ".periods", 1);
  spec.validate();
  return spec;
}

MaterialField build_material(const ExperimentConfig &config, const BoxMesh &mesh)
{
  const ConfigMap &cfg = config.raw;
  const std::string source = cfg.get_or("material.source", "uniform");
  if (source == "uniform")
  {
    const double eps = cfg.get_double_or("material.eps", 1.0);
    const double mu = cfg.get_double_or("material.mu", 1.0);
    DX_VERIFY(eps > 0.0 && mu > 0.0, "uniform material values must be positive");
    return MaterialField::uniform(static_cast<std::size_t>(mesh.n_cells()),
                                  MaterialTensor::isotropic(eps),
                                  MaterialTensor::isotropic(mu),
                                  std::min({eps, mu, 1.0}), std::max({eps, mu, 1.0}));
  }
  if (source == "laminate")
  {
    return sample_laminate_field(mesh, build_laminate(cfg, "material"));
  }
  if (source == "random")
  {
    RandomFieldSampler sampler;
    sampler.alpha = cfg.get_double_or("material.alpha", 1.0);
    sampler.beta = cfg.get_double_or("material.beta", 11.68);
    sampler.blocks = cfg.get_int_or("material.blocks", 3);
    sampler.seed = config.seed;
    DX_VERIFY(sampler.alpha > 0.0 && sampler.beta >= sampler.alpha,
              "material bounds must satisfy 0 < alpha <= beta");
    return sampler.sample(mesh, 0);
  }
  if (source == "design_file")
  {
    const std::string path = cfg.get("material.design_file");
    DX_VERIFY(std::filesystem::exists(path),
              "referenced design file does not exist: " + path);
    const DesignPoint d = design_from_text(read_file(path));
    return d.realize(mesh);
  }
  throw ValidationError("unknown material source: " + source);
}

Complex get_shift(const ConfigMap &cfg)
{
  return {cfg.get_double_or("solver.shift_re", 1.0),
          cfg.get_double_or("solver.shift_im", 0.0)};
}

struct Artifacts
{
  std::filesystem::path dir;
  std::vector<std::pair<std::string, std::string>> files;

  void add(const std::string &name, const std::string &content)
  {
    files.emplace_back(name, content);
  }

  void flush()
  {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
      throw IoError("cannot create output directory: " + dir.string());
    for (const auto &[name, content] : files)
      write_file((dir / name).string(), content);
  }
};

void run_spectrum(const ExperimentConfig &config, Artifacts &arts)
{
  const auto mesh = build_mesh(config.raw);
  const MaterialField field = build_material(config, *mesh);
  const ImpedanceSpec z = build_impedance(config.raw);
  const OperatorPair op = assemble_maxwell(mesh, field, z);
  const int k = config.raw.get_int_or("solver.k", 6);
  const SpectrumReport rep = solve_eigenpairs(op, get_shift(config.raw), k);
  if (!rep.converged)
    log_info("spectrum: " + rep.message);
  arts.add("spectrum.csv", to_csv(rep));
  arts.add("spectrum.txt", to_text(rep));
}

void run_gap_scan(const ExperimentConfig &config, Artifacts &arts)
{
  const auto mesh = build_mesh(config.raw);
  const ImpedanceSpec z = build_impedance(config.raw);
  RandomFieldSampler sampler;
  sampler.alpha = config.raw.get_double_or("scan.alpha", 1.0);
  sampler.beta = config.raw.get_double_or("scan.beta", 11.68);
  sampler.blocks = config.raw.get_int_or("scan.blocks", 3);
  sampler.seed = config.seed;
  const int trials = config.raw.get_int("scan.trials");
  DX_VERIFY(trials >= 1, "scan.trials must be >= 1");
  const auto sre = config.raw.get_doubles("scan.shifts_re");
  DX_VERIFY(!sre.empty(), "scan.shifts_re must be nonempty");
  std::vector<Complex> shifts;
  for (double s : sre)
    shifts.emplace_back(s, 0.0);
  const int k = config.raw.get_int_or("solver.k", 6);
  const GapScanResult res = spectral_gap_scan(sampler, trials, mesh, z, shifts, k,
                                              1e-4, config.threads);
  arts.add("gap_scan.csv", to_csv(res));
  std::ostringstream os;
  os << "r_min = " << format_g17(res.r_min) << "\n";
  os << "failures = " << res.failures << "\n";
  arts.add("gap_scan.txt", os.str());
}

void run_hconv(const ExperimentConfig &config, Artifacts &arts)
{
  const LaminateSpec spec = build_laminate(config.raw, "hconv");
  const auto n_list = config.raw.get_ints("hconv.n_list");
  MaterialTensor candidate;
  const std::string cand = config.raw.get_or("hconv.candidate", "hlimit");
  if (cand == "hlimit")
  {
    candidate = spec.hlimit();
  }
  else if (cand == "arithmetic")
  {
    candidate = MaterialTensor::isotropic(theta_means(spec.eps1, spec.eps2,
                                                      spec.theta)
                                              .lam_plus);
  }
  else
  {
    const auto vals = config.raw.get_doubles("hconv.candidate");
    DX_VERIFY(vals.size() == 6, "hconv.candidate must be hlimit, arithmetic, "
                                "or six upper-triangle entries");
    std::array<double, 6> u{};
    std::copy(vals.begin(), vals.end(), u.begin());
    candidate = MaterialTensor::from_upper_triangle(u);
  }
  const DivCurlReport rep = divcurl_check(spec, candidate, n_list);
  arts.add("divcurl.txt", to_text(rep));
}

void run_eigen_convergence(const ExperimentConfig &config, Artifacts &arts)
{
  const auto mesh = build_mesh(config.raw);
  const ImpedanceSpec z = build_impedance(config.raw);
  const LaminateSpec spec = build_laminate(config.raw, "laminate");
  const auto n_list = config.raw.get_ints("laminate.n_list");
  const int k = config.raw.get_int_or("solver.k", 6);
  const ConvergenceTable table = eigen_convergence_experiment(
      spec, n_list, mesh, z, get_shift(config.raw), k);
  arts.add("convergence.csv", to_csv(table));
  if (table.ambiguous)
    log_info("eigen_convergence: matching ambiguity flagged in trajectories");
}

void run_optimize(const ExperimentConfig &config, Artifacts &arts)
{
  const auto mesh = build_mesh(config.raw);
  const ImpedanceSpec z = build_impedance(config.raw);
  TargetInterval interval{config.raw.get_double("target.phi_minus"),
                          config.raw.get_double("target.phi_plus")};
  interval.validate();

  DesignPoint d0;
  if (config.raw.has("optimize.design_file"))
  {
    d0 = design_from_text(read_file(config.raw.get("optimize.design_file")));
  }
  else
  {
    d0 = DesignPoint::uniform(config.raw.get_int_or("optimize.design_nx", 4),
                              config.raw.get_int_or("optimize.design_ny", 4),
                              config.raw.get_int_or("optimize.design_nz", 4),
                              config.raw.get_double_or("optimize.theta0", 0.5),
                              0, config.raw.get_double_or("optimize.eps1", 1.0),
                              config.raw.get_double_or("optimize.eps2", 11.68));
  }

  OptimizeOptions opts;
  opts.budget = config.raw.get_int_or("optimize.budget", 200);
  opts.k = config.raw.get_int_or("solver.k", 6);
  opts.shift = get_shift(config.raw);
  const std::string method = config.raw.get_or("optimize.method", "coordinate_search");
  if (method == "coordinate_search")
    opts.method = SearchMethod::coordinate_search;
  else if (method == "nelder_mead")
    opts.method = SearchMethod::nelder_mead;
  else
    throw ValidationError("unknown optimize method: " + method);

  const OptimizeResult res = optimize(d0, mesh, z, interval, opts);
  arts.add("trace.csv", to_csv(res.trace));
  arts.add("design.txt", to_text(res.best));
  std::ostringstream os;
  os << "best_value = " << format_g17(res.best_value) << "\n";
  os << "best_omega = " << format_g17(res.best_omega.real()) << " "
     << format_g17(res.best_omega.imag()) << "\n";
  os << "evaluations = " << res.trace.evaluations << "\n";
  arts.add("optimize.txt", os.str());
  if (res.trace.solver_aborted)
    throw SolverError("optimizer aborted: " + res.trace.message);
}

void run_closure_check(const ExperimentConfig &config, Artifacts &arts)
{
  const auto vals = config.raw.get_doubles("closure.tensor");
  DX_VERIFY(vals.size() == 6,
            "closure.tensor needs six upper-triangle entries (xx xy xz yy yz zz)");
  std::array<double, 6> u{};
  std::copy(vals.begin(), vals.end(), u.begin());
  const MaterialTensor a = MaterialTensor::from_upper_triangle(u);
  const double eps1 = config.raw.get_double("closure.eps1");
  const double eps2 = config.raw.get_double("closure.eps2");
  DX_VERIFY(eps1 < eps2, "closure requires eps1 < eps2");
  const HClosureResult res = hclosure_search(a, eps1, eps2);
  std::ostringstream os;
  os << "member: " << (res.member ? "true" : "false") << "\n";
  os << "theta = " << format_g17(res.theta) << "\n";
  os << "violation = " << format_g17(res.violation) << "\n";
  arts.add("closure.txt", os.str());
}

}  // namespace

int run_experiment(const ExperimentConfig &config)
{
  const auto t0 = std::chrono::steady_clock::now();
  Artifacts arts;
  arts.dir = config.out_dir;
  try
  {
    log_info(std::string("running ") + kind_name(config.kind));
    switch (config.kind)
    {
      case ExperimentKind::spectrum:
        run_spectrum(config, arts);
        break;
      case ExperimentKind::gap_scan:
        run_gap_scan(config, arts);
        break;
      case ExperimentKind::hconv_test:
        run_hconv(config, arts);
        break;
      case ExperimentKind::eigen_convergence:
        run_eigen_convergence(config, arts);
        break;
      case ExperimentKind::optimize:
        run_optimize(config, arts);
        break;
      case ExperimentKind::closure_check:
        run_closure_check(config, arts);
        break;
    }

    const auto t1 = std::chrono::steady_clock::now();
    const double wall =
        std::chrono::duration_cast<std::chrono::duration<double>>(t1 - t0).count();
    std::ostringstream manifest;
    manifest << "# dissipax experiment manifest\n";
    manifest << "version = " << version_string() << "\n";
    manifest << "kind = " << kind_name(config.kind) << "\n";
    manifest << "seed = " << config.seed << "\n";
    manifest << "threads = " << config.threads << "\n";
    manifest << "wall_seconds = " << format_g17(wall) << "\n";
    manifest << "units = normalized (lengths in units where the wave speed of "
                "the unit phase is 1)\n";
    manifest << "[config]\n" << config.raw.echo();
    arts.add("manifest.txt", manifest.str());
    arts.flush();
    return kExitOk;
  }
  catch (const ValidationError &ex)
  {
    std::cerr << "error = validation\nmessage = " << ex.what() << "\n";
    return kExitValidation;
  }
  catch (const SolverError &ex)
  {
    std::cerr << "error = solver\nmessage = " << ex.what() << "\n";
    return kExitSolver;
  }
  catch (const IoError &ex)
  {
    std::cerr << "error = io\nmessage = " << ex.what() << "\n";
    return kExitIo;
  }
  catch (const std::exception &ex)
  {
    std::cerr << "error = solver\nmessage = " << ex.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace dissipax
