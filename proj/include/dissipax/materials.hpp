// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_MATERIALS_HPP
#define DISSIPAX_MATERIALS_HPP

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "dissipax/common.hpp"

namespace dissipax
{

/// Real symmetric 3x3 material tensor (relative permittivity/permeability).
/// Only the six independent entries are stored, so symmetry holds exactly.
struct MaterialTensor
{
  double xx = 1.0, yy = 1.0, zz = 1.0;
  double xy = 0.0, xz = 0.0, yz = 0.0;

  static MaterialTensor identity() { return {}; }
  static MaterialTensor isotropic(double c) { return {c, c, c, 0.0, 0.0, 0.0}; }
  static MaterialTensor diag(double a, double b, double c)
  {
    return {a, b, c, 0.0, 0.0, 0.0};
  }

  /// Builds from a full 3x3 matrix; rejects non-symmetric or non-finite input.
  static MaterialTensor from_matrix(const Eigen::Matrix3d &m, double sym_tol = 0.0);

  Eigen::Matrix3d full() const;

  /// Eigenvalues in ascending order.
  std::array<double, 3> eigenvalues() const;

  /// R * A * R^T for a rotation R.
  MaterialTensor rotated(const Eigen::Matrix3d &rot) const;

  /// Row-major upper-triangle serialization order (xx, xy, xz, yy, yz, zz).
  std::array<double, 6> upper_triangle() const { return {xx, xy, xz, yy, yz, zz}; }
  static MaterialTensor from_upper_triangle(const std::array<double, 6> &u)
  {
    return {u[0], u[3], u[5], u[1], u[2], u[4]};
  }

  MaterialTensor inverse() const;
  bool finite() const;
};

/// Spectrum of A contained in [alpha - tol, beta + tol]; this is the symmetric
/// form of the two-sided coercivity condition defining the admissible class.
bool check_coercivity(const MaterialTensor &a, double alpha, double beta,
                      double rel_tol = 1e-9);

/// Weighted harmonic/arithmetic means of two isotropic phases at volume
/// fraction theta of phase 1.
struct ThetaMeans
{
  double lam_minus = 0.0;  ///< weighted harmonic mean
  double lam_plus = 0.0;   ///< weighted arithmetic mean
  double theta = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
};

ThetaMeans theta_means(double eps1, double eps2, double theta);

/// Membership in the two-phase G_theta-closure set M_theta: eigenvalue bounds
/// lam_minus <= A <= lam_plus plus the two trace inequalities
///   Tr((A - eps1 I)^-1) <= 1/(lam- - eps1) + 2/(lam+ - eps1)
///   Tr((eps2 I - A)^-1) <= 1/(eps2 - lam-) + 2/(eps2 - lam+).
/// theta in {0,1} degenerates to the singleton {eps_phase * I}. An eigenvalue
/// of A exactly at eps1 (resp. eps2) at interior theta makes the corresponding
/// trace +infinity, which fails against the finite bound; see the case table
/// in mtheta_violation().
bool in_Mtheta(const MaterialTensor &a, double eps1, double eps2, double theta,
               double rel_tol = 1e-9);

/// Signed constraint violation of M_theta membership: <= 0 iff member (up to
/// the caller's tolerance). Exposed for the 1-D closure search.
///
/// Case table for singular trace expressions (interior theta):
///   eig(A) == eps1 : first trace is +inf, finite bound -> violation +inf
///   eig(A) == eps2 : second trace is +inf, finite bound -> violation +inf
///   theta == 1     : set is {eps1 I}; max-abs deviation from eps1 I
///   theta == 0     : set is {eps2 I}; max-abs deviation from eps2 I
double mtheta_violation(const MaterialTensor &a, double eps1, double eps2,
                        double theta);

struct HClosureResult
{
  bool member = false;
  double theta = 0.0;      ///< best volume fraction found
  double violation = 0.0;  ///< violation at that theta (<= tol iff member)
};

/// Membership in the union of M_theta over theta in [0,1], i.e. the H-closure
/// of two-phase isotropic mixtures. 201-point grid on [0,1] followed by
/// golden-section refinement of the best bracket; the defining conditions
/// depend only on eigenvalues, so membership is rotation-invariant.
HClosureResult hclosure_search(const MaterialTensor &a, double eps1, double eps2,
                               double rel_tol = 1e-9);

bool in_hclosure(const MaterialTensor &a, double eps1, double eps2,
                 double rel_tol = 1e-9);

/// Effective tensor of a rank-1 laminate: harmonic mean along the layering
/// normal, arithmetic mean on the orthogonal complement.
MaterialTensor laminate_hlimit(double eps1, double eps2, double theta,
                               const Eigen::Vector3d &normal);

/// Feasibility restoration: eigenvalues are clipped into [lam-, lam+], then
/// shrunk along the straight segment toward the laminate spectrum
/// (lam-, lam+, lam+) until both trace inequalities hold (bisection to 1e-12
/// in the segment parameter). Idempotent on members.
MaterialTensor project_to_Mtheta(const MaterialTensor &a, double eps1, double eps2,
                                 double theta);

/// Cell-wise material pair with its admissibility bounds.
struct MaterialField
{
  std::vector<MaterialTensor> eps;
  std::vector<MaterialTensor> mu;
  double alpha = 1.0;
  double beta = 1.0;

  static MaterialField uniform(std::size_t n_cells, const MaterialTensor &e,
                               const MaterialTensor &m, double alpha, double beta);

  std::size_t n_cells() const { return eps.size(); }
  /// Every cell tensor passes the (alpha, beta) admissibility check.
  bool admissible(double rel_tol = 1e-9) const;
};

}  // namespace dissipax

#endif  // DISSIPAX_MATERIALS_HPP
