// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

namespace dissipax
{

namespace
{
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double distance_to_interval(Complex omega, const TargetInterval &interval)
{
  interval.validate();
  const double re = omega.real(), im = omega.imag();
  if (re >= interval.phi_minus && re <= interval.phi_plus)
  {
    return std::abs(im);
  }
  const double d1 = std::abs(omega - Complex(interval.phi_minus, 0.0));
  const double d2 = std::abs(omega - Complex(interval.phi_plus, 0.0));
  return std::min(d1, d2);
}

DesignPoint DesignPoint::uniform(int nx, int ny, int nz, double theta0, int axis0,
                                 double eps1, double eps2)
{
  DesignPoint d;
  d.nx = nx;
  d.ny = ny;
  d.nz = nz;
  d.eps1 = eps1;
  d.eps2 = eps2;
  d.theta.assign(d.n_cells(), theta0);
  d.axis.assign(d.n_cells(), axis0);
  d.validate();
  return d;
}

void DesignPoint::validate() const
{
  DX_VERIFY(nx >= 1 && ny >= 1 && nz >= 1, "design grid dims must be >= 1");
  DX_VERIFY(eps1 > 0.0 && eps2 > 0.0 && eps1 <= eps2,
            "design phases must satisfy 0 < eps1 <= eps2");
  if (explicit_tensors)
  {
    DX_VERIFY(tensors.size() == n_cells(), "tensor count must match the design grid");
  }
  else
  {
    DX_VERIFY(theta.size() == n_cells() && axis.size() == n_cells(),
              "theta/axis counts must match the design grid");
    for (double t : theta)
      DX_VERIFY(t >= 0.0 && t <= 1.0, "design theta must lie in [0,1]");
    for (int a : axis)
      DX_VERIFY(a >= 0 && a <= 2, "design axis must be 0, 1, or 2");
  }
}

MaterialField DesignPoint::realize(const BoxMesh &mesh) const
{
  validate();
  MaterialField f;
  f.alpha = std::min(eps1, 1.0);
  f.beta = std::max(eps2, 1.0);
  f.eps.resize(mesh.n_cells());
  f.mu.assign(mesh.n_cells(), MaterialTensor::identity());
  for (int c = 0; c < mesh.n_cells(); ++c)
  {
    const Eigen::Vector3d x = mesh.cell_center(c);
    const int di = std::min(nx - 1, static_cast<int>(nx * x.x() / mesh.lx()));
    const int dj = std::min(ny - 1, static_cast<int>(ny * x.y() / mesh.ly()));
    const int dk = std::min(nz - 1, static_cast<int>(nz * x.z() / mesh.lz()));
    const std::size_t dc = static_cast<std::size_t>(di + nx * (dj + ny * dk));
    if (explicit_tensors)
    {
      // restore feasibility before use; members pass through unchanged
      const double th = theta.empty() ? 0.5 : theta[dc];
      f.eps[c] = (eps1 < eps2) ? project_to_Mtheta(tensors[dc], eps1, eps2, th)
                               : tensors[dc];
    }
    else
    {
      Eigen::Vector3d n = Eigen::Vector3d::Zero();
      n(axis[dc]) = 1.0;
      f.eps[c] = laminate_hlimit(eps1, eps2, theta[dc], n);
    }
  }
  return f;
}

std::uint64_t DesignPoint::hash() const
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const void *data, std::size_t len) {
    const auto *p = static_cast<const unsigned char *>(data);
    for (std::size_t i = 0; i < len; ++i)
    {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  };
  mix(&nx, sizeof nx);
  mix(&ny, sizeof ny);
  mix(&nz, sizeof nz);
  if (explicit_tensors)
  {
    for (const auto &t : tensors)
    {
      const auto u = t.upper_triangle();
      mix(u.data(), sizeof(double) * u.size());
    }
  }
  else
  {
    mix(theta.data(), sizeof(double) * theta.size());
    mix(axis.data(), sizeof(int) * axis.size());
  }
  return h;
}

EvaluateResult evaluate_design(const DesignPoint &d,
                               const std::shared_ptr<const BoxMesh> &mesh,
                               const ImpedanceSpec &z,
                               const TargetInterval &interval, Complex shift, int k)
{
  interval.validate();
  const MaterialField field = d.realize(*mesh);
  const OperatorPair op = assemble_maxwell(mesh, field, z);
  const SpectrumReport rep = solve_eigenpairs(op, shift, k);

  const double zero_cut = kZeroExclusionTol * std::max(1.0, std::abs(shift));
  EvaluateResult res;
  res.value = kInf;
  res.solver_iterations = rep.iterations;
  for (const auto &p : rep.eigenpairs)
  {
    if (!p.converged || std::abs(p.omega) <= zero_cut)
      continue;
    const double v = distance_to_interval(p.omega, interval);
    bool better = v < res.value;
    if (!better && res.has_eigenvalue && v == res.value)
    {
      // deterministic tie-break: smaller |Im|, then smaller |Re|
      const double ia = std::abs(p.omega.imag()), ib = std::abs(res.omega.imag());
      better = ia < ib || (ia == ib && std::abs(p.omega.real()) <
                                           std::abs(res.omega.real()));
    }
    if (better)
    {
      res.value = v;
      res.omega = p.omega;
      res.has_eigenvalue = true;
    }
  }
  return res;
}

namespace
{

struct Evaluator
{
  const std::shared_ptr<const BoxMesh> &mesh;
  const ImpedanceSpec &z;
  const TargetInterval &interval;
  const OptimizeOptions &opts;
  OptimizationTrace &trace;
  double best_value = kInf;

  EvaluateResult operator()(const DesignPoint &d)
  {
    const EvaluateResult r =
        evaluate_design(d, mesh, z, interval, opts.shift, opts.k);
    ++trace.evaluations;
    best_value = std::min(best_value, r.value);
    TraceRecord rec;
    rec.iteration = trace.evaluations;
    rec.design_hash = d.hash();
    rec.omega = r.omega;
    rec.value = r.value;
    rec.best_value = best_value;
    rec.solver_iterations = r.solver_iterations;
    trace.records.push_back(rec);
    return r;
  }

  bool exhausted() const { return trace.evaluations >= opts.budget; }
};

OptimizeResult coordinate_search(const DesignPoint &d0, Evaluator &eval,
                                 const OptimizeOptions &opts)
{
  OptimizeResult out;
  out.best = d0;
  EvaluateResult cur = eval(d0);
  out.best_value = cur.value;
  out.best_omega = cur.omega;

  double step = opts.initial_step;
  while (!eval.exhausted() && step >= opts.step_floor)
  {
    bool improved_sweep = false;
    for (std::size_t c = 0; c < out.best.n_cells() && !eval.exhausted(); ++c)
    {
      // theta moves first, then the two alternative lamination axes
      const double t0 = out.best.theta[c];
      const int a0 = out.best.axis[c];
      struct Move
      {
        double theta;
        int axis;
      };
      std::vector<Move> moves;
      if (t0 + step <= 1.0)
        moves.push_back({t0 + step, a0});
      if (t0 - step >= 0.0)
        moves.push_back({t0 - step, a0});
      moves.push_back({t0, (a0 + 1) % 3});
      moves.push_back({t0, (a0 + 2) % 3});
      for (const Move &mv : moves)
      {
        if (eval.exhausted())
          break;
        DesignPoint cand = out.best;
        cand.theta[c] = mv.theta;
        cand.axis[c] = mv.axis;
        const EvaluateResult r = eval(cand);
        if (r.value < out.best_value)
        {
          out.best = std::move(cand);
          out.best_value = r.value;
          out.best_omega = r.omega;
          improved_sweep = true;
          break;  // accept first improvement, move to the next cell
        }
      }
    }
    if (!improved_sweep)
      step *= 0.5;
  }
  return out;
}

OptimizeResult nelder_mead(const DesignPoint &d0, Evaluator &eval,
                           const OptimizeOptions &opts)
{
  // Simplex over the theta vector with axes held fixed; reflections are
  // clamped into [0,1] so every vertex stays feasible.
  const std::size_t dim = d0.n_cells();
  auto make_design = [&](const std::vector<double> &th) {
    DesignPoint d = d0;
    d.theta = th;
    for (auto &t : d.theta)
      t = std::clamp(t, 0.0, 1.0);
    return d;
  };

  struct Vertex
  {
    std::vector<double> th;
    double value;
    Complex omega;
  };
  std::vector<Vertex> simplex;
  {
    Vertex v0{d0.theta, 0.0, {}};
    const EvaluateResult r = eval(d0);
    v0.value = r.value;
    v0.omega = r.omega;
    simplex.push_back(std::move(v0));
  }
  for (std::size_t i = 0; i < dim && !eval.exhausted(); ++i)
  {
    Vertex v{d0.theta, 0.0, {}};
    v.th[i] = std::clamp(v.th[i] + opts.initial_step, 0.0, 1.0);
    const EvaluateResult r = eval(make_design(v.th));
    v.value = r.value;
    v.omega = r.omega;
    simplex.push_back(std::move(v));
  }

  auto order = [&]() {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex &a, const Vertex &b) { return a.value < b.value; });
  };
  order();

  while (!eval.exhausted())
  {
    const std::size_t worst = simplex.size() - 1;
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < worst; ++v)
      for (std::size_t i = 0; i < dim; ++i)
        centroid[i] += simplex[v].th[i] / static_cast<double>(worst);

    auto combine = [&](double coeff) {
      std::vector<double> th(dim);
      for (std::size_t i = 0; i < dim; ++i)
        th[i] = std::clamp(centroid[i] + coeff * (centroid[i] - simplex[worst].th[i]),
                           0.0, 1.0);
      return th;
    };

    const auto refl_th = combine(1.0);
    const EvaluateResult refl = eval(make_design(refl_th));
    if (refl.value < simplex[0].value && !eval.exhausted())
    {
      const auto exp_th = combine(2.0);
      const EvaluateResult expd = eval(make_design(exp_th));
      if (expd.value < refl.value)
        simplex[worst] = {exp_th, expd.value, expd.omega};
      else
        simplex[worst] = {refl_th, refl.value, refl.omega};
    }
    else if (refl.value < simplex[worst - 1].value)
    {
      simplex[worst] = {refl_th, refl.value, refl.omega};
    }
    else if (!eval.exhausted())
    {
      const auto con_th = combine(-0.5);
      const EvaluateResult con = eval(make_design(con_th));
      if (con.value < simplex[worst].value)
      {
        simplex[worst] = {con_th, con.value, con.omega};
      }
      else
      {
        // shrink toward the best vertex
        for (std::size_t v = 1; v < simplex.size() && !eval.exhausted(); ++v)
        {
          for (std::size_t i = 0; i < dim; ++i)
            simplex[v].th[i] = 0.5 * (simplex[v].th[i] + simplex[0].th[i]);
          const EvaluateResult r = eval(make_design(simplex[v].th));
          simplex[v].value = r.value;
          simplex[v].omega = r.omega;
        }
      }
    }
    order();
  }

  OptimizeResult out;
  out.best = make_design(simplex[0].th);
  out.best_value = simplex[0].value;
  out.best_omega = simplex[0].omega;
  return out;
}

}  // namespace

OptimizeResult optimize(const DesignPoint &d0,
                        const std::shared_ptr<const BoxMesh> &mesh,
                        const ImpedanceSpec &z, const TargetInterval &interval,
                        const OptimizeOptions &opts)
{
  DX_VERIFY(opts.budget >= 1, "optimization budget must be >= 1");
  DX_VERIFY(!d0.explicit_tensors,
            "search perturbs (theta, axis) designs; realize explicit tensors "
            "through evaluate_design directly");
  d0.validate();
  interval.validate();

  OptimizationTrace trace;
  Evaluator eval{mesh, z, interval, opts, trace};
  OptimizeResult out;
  try
  {
    if (opts.method == SearchMethod::coordinate_search)
      out = coordinate_search(d0, eval, opts);
    else
      out = nelder_mead(d0, eval, opts);
  }
  catch (const SolverError &ex)
  {
    trace.solver_aborted = true;
    trace.message = ex.what();
    out.best = d0;
    out.best_value = eval.best_value;
  }
  out.trace = std::move(trace);
  return out;
}

MinPositiveResult min_positive_eigenvalue(const RandomFieldSampler &sampler,
                                          const std::shared_ptr<const BoxMesh> &mesh,
                                          double c, int trials, Complex shift,
                                          int k)
{
  DX_VERIFY(trials >= 1, "at least one trial required");
  const ImpedanceSpec z = ImpedanceSpec::selfadjoint_ic(c, -1);

  MinPositiveResult out;
  out.omega_star_plus = kInf;
  out.omega_star_minus = -kInf;
  for (int t = 0; t < trials; ++t)
  {
    SignedExtremeRecord rec;
    rec.trial = static_cast<std::uint64_t>(t);
    try
    {
      const MaterialField field = sampler.sample(*mesh, rec.trial);
      const OperatorPair op = assemble_maxwell(mesh, field, z);
      const SpectrumReport rep = solve_eigenpairs(op, shift, k);
      rec.min_positive = kInf;
      rec.max_negative = -kInf;
      for (const auto &p : rep.eigenpairs)
      {
        if (!p.converged)
          continue;
        const double w = p.omega.real();
        if (w > 0.0)
          rec.min_positive = std::min(rec.min_positive, w);
        if (w < 0.0)
          rec.max_negative = std::max(rec.max_negative, w);
      }
      rec.both_signs =
          std::isfinite(rec.min_positive) && std::isfinite(rec.max_negative);
      if (std::isfinite(rec.min_positive) && rec.min_positive < out.omega_star_plus)
      {
        out.omega_star_plus = rec.min_positive;
        out.best_trial = rec.trial;
      }
      if (std::isfinite(rec.max_negative))
        out.omega_star_minus = std::max(out.omega_star_minus, rec.max_negative);
    }
    catch (const std::exception &)
    {
      rec.ok = false;
    }
    out.both_signs_everywhere = out.both_signs_everywhere && rec.ok && rec.both_signs;
    out.records.push_back(rec);
  }
  return out;
}

}  // namespace dissipax
