// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_OPTIMIZER_HPP
#define DISSIPAX_OPTIMIZER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dissipax/arnoldi.hpp"
#include "dissipax/scan.hpp"

namespace dissipax
{

/// Target band I = [phi_minus, phi_plus] on the real frequency axis.
struct TargetInterval
{
  double phi_minus = 0.0;
  double phi_plus = 0.0;

  void validate() const
  {
    DX_VERIFY(phi_minus <= phi_plus, "target interval requires phi- <= phi+");
  }
};

/// Euclidean distance in C from omega to the segment [phi-, phi+] x {0}.
double distance_to_interval(Complex omega, const TargetInterval &interval);

/// Per-cell composite design on a coarse design grid mapped onto the mesh by
/// cell centers. Either (theta, lamination axis) realized through the rank-1
/// laminate H-limit (feasible by construction), or explicit tensors that are
/// projected into M_theta when realized. mu stays the identity
/// (photonic-crystal family).
struct DesignPoint
{
  int nx = 1, ny = 1, nz = 1;
  std::vector<double> theta;
  std::vector<int> axis;
  double eps1 = 1.0;
  double eps2 = 11.68;
  bool explicit_tensors = false;
  std::vector<MaterialTensor> tensors;

  static DesignPoint uniform(int nx, int ny, int nz, double theta0, int axis0,
                             double eps1, double eps2);

  std::size_t n_cells() const
  {
    return static_cast<std::size_t>(nx) * ny * nz;
  }
  void validate() const;

  /// Rasterizes the design onto a mesh; every realized tensor is in the
  /// closure by construction (laminate mode) or after projection.
  MaterialField realize(const BoxMesh &mesh) const;

  /// FNV-1a over the design payload, for trace records.
  std::uint64_t hash() const;
};

struct TraceRecord
{
  int iteration = 0;
  std::uint64_t design_hash = 0;
  Complex omega;
  double value = 0.0;      ///< d_I of the selected eigenvalue (inf sentinel if none)
  double best_value = 0.0; ///< best-so-far (non-increasing)
  int solver_iterations = 0;
};

struct OptimizationTrace
{
  std::vector<TraceRecord> records;
  int evaluations = 0;
  bool solver_aborted = false;
  std::string message;
};

struct EvaluateResult
{
  Complex omega;       ///< eigenvalue minimizing d_I among nonzero ones
  double value = 0.0;  ///< d_I(omega); +inf sentinel when nothing converged
  int solver_iterations = 0;
  bool has_eigenvalue = false;
};

/// Threshold below which eigenvalues are treated as deflation residue and
/// excluded from the objective, relative to max(1, |shift|).
inline constexpr double kZeroExclusionTol = 1e-4;

/// Realizes the design, solves k eigenpairs near the shift, discards
/// |omega| below the zero-exclusion threshold, and returns the nonzero
/// eigenvalue minimizing d_I. Ties are broken by smaller |Im|, then smaller
/// |Re|. Deterministic for a fixed design.
EvaluateResult evaluate_design(const DesignPoint &d,
                               const std::shared_ptr<const BoxMesh> &mesh,
                               const ImpedanceSpec &z, const TargetInterval &interval,
                               Complex shift, int k);

enum class SearchMethod
{
  coordinate_search,
  nelder_mead
};

struct OptimizeOptions
{
  SearchMethod method = SearchMethod::coordinate_search;
  int budget = 200;
  double initial_step = 0.25;
  double step_floor = 1e-3;
  int k = 6;
  Complex shift;
};

struct OptimizeResult
{
  DesignPoint best;
  double best_value = 0.0;
  Complex best_omega;
  OptimizationTrace trace;
};

/// Derivative-free minimization of d_I over per-cell (theta, axis) designs.
/// Coordinate search sweeps cells in a fixed order, trying +-step in theta
/// and the two alternative lamination axes, accepting the first improvement;
/// the step halves when a sweep makes no progress and stops at the floor.
/// Every visited design stays feasible by construction.
OptimizeResult optimize(const DesignPoint &d0,
                        const std::shared_ptr<const BoxMesh> &mesh,
                        const ImpedanceSpec &z, const TargetInterval &interval,
                        const OptimizeOptions &opts);

struct SignedExtremeRecord
{
  std::uint64_t trial = 0;
  double min_positive = 0.0;
  double max_negative = 0.0;
  bool both_signs = false;
  bool ok = true;
};

struct MinPositiveResult
{
  double omega_star_plus = 0.0;   ///< smallest positive eigenvalue over trials
  double omega_star_minus = 0.0;  ///< largest negative eigenvalue over trials
  std::uint64_t best_trial = 0;
  std::vector<SignedExtremeRecord> records;
  bool both_signs_everywhere = true;
};

/// Selfadjoint extremal case: with Z = selfadjoint_ic(c, -) the operator is
/// Hermitian and its spectrum real with both signs present. Samples material
/// pairs, solves near a small positive shift, and reports the smallest
/// positive and largest negative eigenvalues found.
MinPositiveResult min_positive_eigenvalue(const RandomFieldSampler &sampler,
                                          const std::shared_ptr<const BoxMesh> &mesh,
                                          double c, int trials, Complex shift,
                                          int k = 8);

}  // namespace dissipax

#endif  // DISSIPAX_OPTIMIZER_HPP
