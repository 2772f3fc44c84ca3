// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/homogenization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dissipax
{

void LaminateSpec::validate() const
{
  DX_VERIFY(eps1 > 0.0 && eps2 > 0.0, "laminate phases must be positive");
  DX_VERIFY(theta >= 0.0 && theta <= 1.0, "theta must lie in [0,1]");
  DX_VERIFY(normal_axis >= 0 && normal_axis <= 2, "normal axis must be 0, 1, or 2");
  DX_VERIFY(periods >= 1, "period count must be >= 1");
}

double LaminateSpec::phase_at(double s) const
{
  double t = s * periods;
  t -= std::floor(t);
  return t < theta ? eps1 : eps2;
}

MaterialTensor LaminateSpec::hlimit() const
{
  Eigen::Vector3d n = Eigen::Vector3d::Zero();
  n(normal_axis) = 1.0;
  return laminate_hlimit(eps1, eps2, theta, n);
}

MaterialField sample_laminate_field(const BoxMesh &mesh, const LaminateSpec &spec)
{
  spec.validate();
  const int cells_along =
      spec.normal_axis == 0 ? mesh.nx() : (spec.normal_axis == 1 ? mesh.ny() : mesh.nz());
  DX_VERIFY(cells_along >= 2 * spec.periods,
            "laminate period too fine for the mesh (need >= 2 cells per period)");
  const double len =
      spec.normal_axis == 0 ? mesh.lx() : (spec.normal_axis == 1 ? mesh.ly() : mesh.lz());

  MaterialField f;
  f.alpha = std::min({spec.eps1, spec.eps2, 1.0});
  f.beta = std::max({spec.eps1, spec.eps2, 1.0});
  f.eps.resize(mesh.n_cells());
  f.mu.assign(mesh.n_cells(), MaterialTensor::identity());
  for (int c = 0; c < mesh.n_cells(); ++c)
  {
    const double s = mesh.cell_center(c)(spec.normal_axis) / len;
    f.eps[c] = MaterialTensor::isotropic(spec.phase_at(s));
  }
  return f;
}

DivCurlReport divcurl_check(const LaminateSpec &spec,
                            const MaterialTensor &candidate,
                            const std::vector<int> &n_list, double tol)
{
  spec.validate();
  DX_VERIFY(!n_list.empty(), "divcurl_check needs at least one period count");

  DivCurlReport rep;
  rep.candidate = candidate;
  rep.tol = tol;
  rep.n_list = n_list;

  // Corrector tangent directions t1, t2 and the normal.
  const int na = spec.normal_axis;
  const int t1 = (na + 1) % 3;
  const int t2 = (na + 2) % 3;

  // Exact weak limits: the box holds whole periods, so the phase-1 volume
  // fraction equals theta for every n and the slab averages are n-free.
  const double mean_eps = spec.theta * spec.eps1 + (1.0 - spec.theta) * spec.eps2;
  const double mean_inv = spec.theta / spec.eps1 + (1.0 - spec.theta) / spec.eps2;

  rep.e_limit.setZero();
  rep.d_limit.setZero();
  // corrector 0: E = e_t1, D = eps_n e_t1
  rep.e_limit(t1, 0) = 1.0;
  rep.d_limit(t1, 0) = mean_eps;
  // corrector 1: E = e_t2
  rep.e_limit(t2, 1) = 1.0;
  rep.d_limit(t2, 1) = mean_eps;
  // corrector 2: E = eps_n^{-1} e_n, D = e_n
  rep.e_limit(na, 2) = mean_inv;
  rep.d_limit(na, 2) = 1.0;

  // Per-n corrector exactness: pointwise D = A_n E with continuous tangential
  // E and continuous normal D across every slab interface. The slab pattern
  // only has two phase values, so checking both phases covers every slab.
  double defect = 0.0;
  for (int n : n_list)
  {
    DX_VERIFY(n >= 1, "period counts must be >= 1");
    for (double phase : {spec.eps1, spec.eps2})
    {
      // D - A_n E per corrector at this phase
      defect = std::max(defect, std::abs(phase * 1.0 - phase));         // tangential
      defect = std::max(defect, std::abs(phase * (1.0 / phase) - 1.0)); // normal
    }
    // interface jumps: tangential E is constant (jump 0); normal D is the
    // constant 1 on both sides (jump 0)
  }
  rep.corrector_jump_defect = defect;

  const Eigen::Matrix3d a = candidate.full();
  rep.residual = (rep.d_limit - a * rep.e_limit).norm();
  rep.pass = rep.residual < tol;
  return rep;
}

namespace
{

std::vector<Complex> converged_eigs(const SpectrumReport &rep)
{
  std::vector<Complex> v;
  for (const auto &p : rep.eigenpairs)
    if (p.converged)
      v.push_back(p.omega);
  return v;
}

}  // namespace

ConvergenceTable eigen_convergence_experiment(
    const LaminateSpec &spec, const std::vector<int> &n_list,
    const std::shared_ptr<const BoxMesh> &mesh, const ImpedanceSpec &z,
    Complex shift, int k)
{
  spec.validate();
  DX_VERIFY(!n_list.empty(), "n_list must be nonempty");
  const int cells_along =
      spec.normal_axis == 0 ? mesh->nx()
                            : (spec.normal_axis == 1 ? mesh->ny() : mesh->nz());
  const double min_frac = std::min(spec.theta, 1.0 - spec.theta);
  for (int n : n_list)
  {
    DX_VERIFY(n >= 1, "period counts must be >= 1");
    if (min_frac > 0.0)
    {
      DX_VERIFY(cells_along * min_frac / n >= 2.0 - 1e-12,
                "mesh must resolve the finest laminate with >= 2 cells per slab");
    }
  }

  ConvergenceTable table;

  // Homogenized reference on the same mesh, so discretization error cancels
  // from the gaps.
  MaterialField hom_field;
  hom_field.alpha = std::min({spec.eps1, spec.eps2, 1.0});
  hom_field.beta = std::max({spec.eps1, spec.eps2, 1.0});
  hom_field.eps.assign(mesh->n_cells(), spec.hlimit());
  hom_field.mu.assign(mesh->n_cells(), MaterialTensor::identity());
  const OperatorPair hom_op = assemble_maxwell(mesh, hom_field, z);
  const SpectrumReport hom_rep = solve_eigenpairs(hom_op, shift, k);
  const std::vector<Complex> hom_eigs = converged_eigs(hom_rep);
  DX_VERIFY(!hom_eigs.empty(), "homogenized solve produced no converged eigenpair");

  // Tracked eigenvalue: smallest magnitude among the homogenized ones.
  std::size_t tracked = 0;
  for (std::size_t i = 1; i < hom_eigs.size(); ++i)
    if (std::abs(hom_eigs[i]) < std::abs(hom_eigs[tracked]))
      tracked = i;
  table.omega_inf = hom_eigs[tracked];

  ConvergenceRow hom_row;
  hom_row.periods = 0;
  hom_row.omega = table.omega_inf;
  hom_row.gap = 0.0;
  table.rows.push_back(hom_row);

  for (int n : n_list)
  {
    LaminateSpec sn = spec;
    sn.periods = n;
    const MaterialField field = sample_laminate_field(*mesh, sn);
    const OperatorPair op = assemble_maxwell(mesh, field, z);
    const SpectrumReport rep = solve_eigenpairs(op, shift, k);

    // Nearest-neighbor continuation from the homogenized spectrum with an
    // injectivity constraint; near-ties are flagged.
    std::vector<Complex> lam_eigs;
    std::vector<double> lam_res;
    for (const auto &p : rep.eigenpairs)
      if (p.converged)
      {
        lam_eigs.push_back(p.omega);
        lam_res.push_back(p.residual);
      }

    struct Cand
    {
      double dist;
      std::size_t hom, lam;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < hom_eigs.size(); ++i)
      for (std::size_t j = 0; j < lam_eigs.size(); ++j)
        cands.push_back({std::abs(hom_eigs[i] - lam_eigs[j]), i, j});
    std::sort(cands.begin(), cands.end(),
              [](const Cand &a, const Cand &b) { return a.dist < b.dist; });

    std::vector<int> hom_to_lam(hom_eigs.size(), -1);
    std::vector<char> lam_used(lam_eigs.size(), 0);
    bool ambiguous = false;
    for (std::size_t ci = 0; ci < cands.size(); ++ci)
    {
      const Cand &c = cands[ci];
      if (hom_to_lam[c.hom] >= 0 || lam_used[c.lam])
        continue;
      // a competing assignment at nearly the same distance marks a tie
      for (std::size_t cj = ci + 1; cj < cands.size(); ++cj)
      {
        const Cand &o = cands[cj];
        if (o.dist > c.dist + 1e-9 * std::max(1.0, std::abs(table.omega_inf)))
          break;
        if ((o.hom == c.hom) != (o.lam == c.lam))
          ambiguous = true;
      }
      hom_to_lam[c.hom] = static_cast<int>(c.lam);
      lam_used[c.lam] = 1;
    }

    std::vector<Complex> traj(hom_eigs.size(),
                              Complex(std::numeric_limits<double>::quiet_NaN(), 0));
    for (std::size_t i = 0; i < hom_eigs.size(); ++i)
      if (hom_to_lam[i] >= 0)
        traj[i] = lam_eigs[static_cast<std::size_t>(hom_to_lam[i])];
    table.trajectories.push_back(traj);
    table.ambiguous = table.ambiguous || ambiguous;

    ConvergenceRow row;
    row.periods = n;
    row.matched = hom_to_lam[tracked] >= 0;
    if (row.matched)
    {
      const std::size_t j = static_cast<std::size_t>(hom_to_lam[tracked]);
      row.omega = lam_eigs[j];
      row.gap = std::abs(row.omega - table.omega_inf);
      row.residual = lam_res[j];
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace dissipax
