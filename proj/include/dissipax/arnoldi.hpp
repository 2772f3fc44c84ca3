// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_ARNOLDI_HPP
#define DISSIPAX_ARNOLDI_HPP

#include <optional>
#include <vector>

#include "dissipax/operator.hpp"

namespace dissipax
{

/// One converged eigenpair of the pencil (A, B), energy-normalized
/// (x^H B x = 1) with the largest-magnitude coefficient rotated to the
/// positive real axis.
struct EigenPair
{
  Complex omega;
  VecXc coeffs;          ///< block layout (E, H), reduced E under pec
  double residual = 0.0; ///< ||A x - omega B x|| / ||B x||
  double energy = 0.0;   ///< (eps E, E) + (mu H, H) after normalization
  double trace_ratio = 0.0;
  double pec_defect = 0.0;
  int cluster = -1;          ///< multiplicity annotation id, -1 if isolated
  bool converged = true;
};

struct SpectrumReport
{
  std::vector<EigenPair> eigenpairs;  ///< sorted by |omega - shift|
  Complex shift;
  int requested = 0;
  int krylov_dim = 0;
  int iterations = 0;
  int deflated_kernel_dim = 0;  ///< dimension of the projected-out gradient kernel
  bool converged = true;        ///< all requested pairs below tolerance
  std::string message;
};

struct EigensolverOptions
{
  double tol = 1e-8;          ///< residual threshold for convergence
  int max_krylov = 220;       ///< cap on the Krylov dimension
  int min_krylov = 0;         ///< 0 = choose from k
  double cluster_rel_tol = 1e-6;
  std::uint64_t start_seed = 0x00D15517A0ULL;  ///< deterministic start vector
  int factorization_retries = 3;  ///< shift nudges of +1e-3i on failure
};

/// Shift-invert Arnoldi on (A - shift B)^{-1} B in the B-inner product with
/// per-iteration Hodge deflation of both blocks. The divergence-free subspace
/// is invariant under the shift-inverted operator, so projecting the start
/// vector and re-projecting each Krylov vector keeps the search orthogonal to
/// the gradient kernel up to roundoff.
SpectrumReport solve_eigenpairs(const OperatorPair &op, Complex shift, int k,
                                const EigensolverOptions &opts = {});

/// Dense generalized eigensolve of the full pencil via B = L L^H congruence;
/// oracle for small meshes. Returns eigenvalues sorted by |omega - shift|.
std::vector<Complex> dense_eigenvalues(const OperatorPair &op, Complex shift);

}  // namespace dissipax

#endif  // DISSIPAX_ARNOLDI_HPP
