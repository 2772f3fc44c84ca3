// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_DIAGNOSTICS_HPP
#define DISSIPAX_DIAGNOSTICS_HPP

#include "dissipax/operator.hpp"

namespace dissipax
{

struct EigenPair;

/// |Im omega| threshold below which an eigenvalue is treated as real for the
/// PEC-defect diagnostic.
inline constexpr double kRealEigenvalueTol = 1e-6;

struct BoundaryDiagnostics
{
  /// (||E_tan||^2 + ||H_tan||^2) / (||E||^2_Hcurl + ||H||^2_Hcurl)
  double trace_ratio = 0.0;
  /// ||n x E||_bnd + ||H_tan||_bnd
  double pec_defect = 0.0;
  /// Raised when omega is numerically real, Re Z is coercive-positive, and
  /// the pair nevertheless fails to look like a PEC eigenfield. Under those
  /// hypotheses a real eigenvalue forces vanishing tangential traces.
  bool real_eigenvalue_flag = false;
};

BoundaryDiagnostics boundary_diagnostics(const EigenPair &pair,
                                         const OperatorPair &op,
                                         double pec_defect_tol = 1e-3);

}  // namespace dissipax

#endif  // DISSIPAX_DIAGNOSTICS_HPP
