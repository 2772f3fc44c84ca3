// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/materials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace dissipax
{

namespace
{
constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative scale for tolerance comparisons around a value.
double scale_of(double v) { return std::max(1.0, std::abs(v)); }
}  // namespace

MaterialTensor MaterialTensor::from_matrix(const Eigen::Matrix3d &m, double sym_tol)
{
  DX_VERIFY(m.allFinite(), "material tensor entries must be finite");
  for (int i = 0; i < 3; ++i)
  {
    for (int j = i + 1; j < 3; ++j)
    {
      DX_VERIFY(std::abs(m(i, j) - m(j, i)) <= sym_tol,
                "material tensor must be symmetric");
    }
  }
  return {m(0, 0), m(1, 1), m(2, 2), m(0, 1), m(0, 2), m(1, 2)};
}

Eigen::Matrix3d MaterialTensor::full() const
{
  Eigen::Matrix3d m;
  m << xx, xy, xz, xy, yy, yz, xz, yz, zz;
  return m;
}

std::array<double, 3> MaterialTensor::eigenvalues() const
{
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(full(), Eigen::EigenvaluesOnly);
  const auto &ev = es.eigenvalues();
  return {ev(0), ev(1), ev(2)};
}

MaterialTensor MaterialTensor::rotated(const Eigen::Matrix3d &rot) const
{
  const Eigen::Matrix3d m = rot * full() * rot.transpose();
  // Symmetrize to kill rounding in the congruence product.
  Eigen::Matrix3d s = 0.5 * (m + m.transpose());
  return from_matrix(s);
}

MaterialTensor MaterialTensor::inverse() const
{
  const Eigen::Matrix3d inv = full().inverse();
  return from_matrix(0.5 * (inv + inv.transpose()));
}

bool MaterialTensor::finite() const
{
  return std::isfinite(xx) && std::isfinite(yy) && std::isfinite(zz) &&
         std::isfinite(xy) && std::isfinite(xz) && std::isfinite(yz);
}

bool check_coercivity(const MaterialTensor &a, double alpha, double beta,
                      double rel_tol)
{
  DX_VERIFY(alpha > 0.0 && beta >= alpha, "coercivity bounds require 0 < alpha <= beta");
  DX_VERIFY(a.finite(), "material tensor entries must be finite");
  const auto ev = a.eigenvalues();
  const double tol_lo = rel_tol * scale_of(alpha);
  const double tol_hi = rel_tol * scale_of(beta);
  return ev[0] >= alpha - tol_lo && ev[2] <= beta + tol_hi;
}

ThetaMeans theta_means(double eps1, double eps2, double theta)
{
  DX_VERIFY(eps1 > 0.0 && eps2 > 0.0, "phase permittivities must be positive");
  DX_VERIFY(theta >= 0.0 && theta <= 1.0, "theta must lie in [0,1]");
  ThetaMeans tm;
  tm.theta = theta;
  tm.eps1 = eps1;
  tm.eps2 = eps2;
  tm.lam_minus = 1.0 / (theta / eps1 + (1.0 - theta) / eps2);
  tm.lam_plus = theta * eps1 + (1.0 - theta) * eps2;
  return tm;
}

double mtheta_violation(const MaterialTensor &a, double eps1, double eps2,
                        double theta)
{
  const auto ev = a.eigenvalues();

  // Degenerate fractions: the set collapses to a single isotropic matrix.
  if (theta >= 1.0 || theta <= 0.0)
  {
    const double target = (theta >= 1.0) ? eps1 : eps2;
    double dev = 0.0;
    dev = std::max(dev, std::abs(a.xx - target));
    dev = std::max(dev, std::abs(a.yy - target));
    dev = std::max(dev, std::abs(a.zz - target));
    dev = std::max(dev, std::abs(a.xy));
    dev = std::max(dev, std::abs(a.xz));
    dev = std::max(dev, std::abs(a.yz));
    return dev / scale_of(target);
  }

  const ThetaMeans tm = theta_means(eps1, eps2, theta);
  double v = -kInf;

  // Eigenvalue bounds lam- <= eig(A) <= lam+, relative to the phase scale.
  v = std::max(v, (tm.lam_minus - ev[0]) / scale_of(tm.lam_minus));
  v = std::max(v, (ev[2] - tm.lam_plus) / scale_of(tm.lam_plus));

  // Trace inequalities. Eigenvalues exactly at a phase value make the trace
  // +inf against a finite bound at interior theta.
  double tr1 = 0.0, tr2 = 0.0;
  bool tr1_inf = false, tr2_inf = false;
  for (double lam : ev)
  {
    if (lam - eps1 <= 0.0)
    {
      tr1_inf = true;
    }
    else
    {
      tr1 += 1.0 / (lam - eps1);
    }
    if (eps2 - lam <= 0.0)
    {
      tr2_inf = true;
    }
    else
    {
      tr2 += 1.0 / (eps2 - lam);
    }
  }
  const double bound1 = 1.0 / (tm.lam_minus - eps1) + 2.0 / (tm.lam_plus - eps1);
  const double bound2 = 1.0 / (eps2 - tm.lam_minus) + 2.0 / (eps2 - tm.lam_plus);
  if (tr1_inf)
  {
    v = kInf;
  }
  else
  {
    v = std::max(v, (tr1 - bound1) / scale_of(bound1));
  }
  if (tr2_inf)
  {
    v = kInf;
  }
  else if (v < kInf)
  {
    v = std::max(v, (tr2 - bound2) / scale_of(bound2));
  }
  return v;
}

bool in_Mtheta(const MaterialTensor &a, double eps1, double eps2, double theta,
               double rel_tol)
{
  DX_VERIFY(eps1 < eps2 || (theta <= 0.0 || theta >= 1.0),
            "in_Mtheta requires eps1 < eps2 at interior theta");
  DX_VERIFY(theta >= 0.0 && theta <= 1.0, "theta must lie in [0,1]");
  return mtheta_violation(a, eps1, eps2, theta) <= rel_tol;
}

HClosureResult hclosure_search(const MaterialTensor &a, double eps1, double eps2,
                               double rel_tol)
{
  DX_VERIFY(eps1 < eps2, "hclosure requires eps1 < eps2");

  // Coarse 201-point grid.
  constexpr int kGrid = 201;
  double best_theta = 0.0;
  double best_v = kInf;
  for (int i = 0; i < kGrid; ++i)
  {
    const double theta = static_cast<double>(i) / (kGrid - 1);
    const double v = mtheta_violation(a, eps1, eps2, theta);
    if (v < best_v)
    {
      best_v = v;
      best_theta = theta;
    }
  }

  // Golden-section refinement on the bracket around the best grid point.
  const double h = 1.0 / (kGrid - 1);
  double lo = std::max(0.0, best_theta - h);
  double hi = std::min(1.0, best_theta + h);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = mtheta_violation(a, eps1, eps2, c);
  double fd = mtheta_violation(a, eps1, eps2, d);
  for (int it = 0; it < 80 && (hi - lo) > 1e-14; ++it)
  {
    if (fc < fd)
    {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = mtheta_violation(a, eps1, eps2, c);
    }
    else
    {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = mtheta_violation(a, eps1, eps2, d);
    }
  }
  const double theta_ref = 0.5 * (lo + hi);
  const double v_ref = mtheta_violation(a, eps1, eps2, theta_ref);
  if (v_ref < best_v)
  {
    best_v = v_ref;
    best_theta = theta_ref;
  }

  HClosureResult res;
  res.theta = best_theta;
  res.violation = best_v;
  res.member = best_v <= rel_tol;
  return res;
}

bool in_hclosure(const MaterialTensor &a, double eps1, double eps2, double rel_tol)
{
  return hclosure_search(a, eps1, eps2, rel_tol).member;
}

MaterialTensor laminate_hlimit(double eps1, double eps2, double theta,
                               const Eigen::Vector3d &normal)
{
  DX_VERIFY(eps1 > 0.0 && eps2 > 0.0, "phase permittivities must be positive");
  DX_VERIFY(theta >= 0.0 && theta <= 1.0, "theta must lie in [0,1]");
  const double nn = normal.norm();
  DX_VERIFY(nn > 0.0, "lamination normal must be nonzero");
  const Eigen::Vector3d n = normal / nn;
  const ThetaMeans tm = theta_means(eps1, eps2, theta);
  const Eigen::Matrix3d m =
      tm.lam_minus * (n * n.transpose()) +
      tm.lam_plus * (Eigen::Matrix3d::Identity() - n * n.transpose());
  return MaterialTensor::from_matrix(0.5 * (m + m.transpose()));
}

MaterialTensor project_to_Mtheta(const MaterialTensor &a, double eps1, double eps2,
                                 double theta)
{
  DX_VERIFY(eps1 < eps2 || (theta <= 0.0 || theta >= 1.0),
            "project_to_Mtheta requires eps1 < eps2 at interior theta");
  DX_VERIFY(theta >= 0.0 && theta <= 1.0, "theta must lie in [0,1]");
  if (theta >= 1.0)
  {
    return MaterialTensor::isotropic(eps1);
  }
  if (theta <= 0.0)
  {
    return MaterialTensor::isotropic(eps2);
  }

  const ThetaMeans tm = theta_means(eps1, eps2, theta);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(a.full());
  Eigen::Vector3d lam = es.eigenvalues();  // ascending
  const Eigen::Matrix3d q = es.eigenvectors();

  for (int i = 0; i < 3; ++i)
  {
    lam(i) = std::clamp(lam(i), tm.lam_minus, tm.lam_plus);
  }

  // Shrink toward the laminate spectrum (lam-, lam+, lam+), at which both
  // trace inequalities hold with equality; the trace expressions are convex
  // along the segment, so the feasible t-set is an interval containing t = 1
  // and bisection for the smallest feasible t is well posed.
  const Eigen::Vector3d target(tm.lam_minus, tm.lam_plus, tm.lam_plus);
  auto feasible = [&](double t) {
    const Eigen::Vector3d l = (1.0 - t) * lam + t * target;
    MaterialTensor cand = MaterialTensor::diag(l(0), l(1), l(2));
    return mtheta_violation(cand, eps1, eps2, theta) <= 1e-12;
  };

  double t = 0.0;
  if (!feasible(0.0))
  {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 60; ++it)
    {
      const double mid = 0.5 * (lo + hi);
      if (feasible(mid))
      {
        hi = mid;
      }
      else
      {
        lo = mid;
      }
    }
    t = hi;
  }

  const Eigen::Vector3d l = (1.0 - t) * lam + t * target;
  const Eigen::Matrix3d m = q * l.asDiagonal() * q.transpose();
  return MaterialTensor::from_matrix(0.5 * (m + m.transpose()));
}

MaterialField MaterialField::uniform(std::size_t n_cells, const MaterialTensor &e,
                                     const MaterialTensor &m, double alpha,
                                     double beta)
{
  MaterialField f;
  f.eps.assign(n_cells, e);
  f.mu.assign(n_cells, m);
  f.alpha = alpha;
  f.beta = beta;
  return f;
}

bool MaterialField::admissible(double rel_tol) const
{
  if (eps.size() != mu.size())
  {
    return false;
  }
  for (std::size_t i = 0; i < eps.size(); ++i)
  {
    if (!check_coercivity(eps[i], alpha, beta, rel_tol) ||
        !check_coercivity(mu[i], alpha, beta, rel_tol))
    {
      return false;
    }
  }
  return true;
}

}  // namespace dissipax
