// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/diagnostics.hpp"

#include <cmath>

#include "dissipax/arnoldi.hpp"

namespace dissipax
{

namespace
{
double quad(const SpMatD &m, const VecXc &x)
{
  return x.dot(m * x).real();
}
}  // namespace

BoundaryDiagnostics boundary_diagnostics(const EigenPair &pair,
                                         const OperatorPair &op,
                                         double pec_defect_tol)
{
  DX_VERIFY(pair.coeffs.size() == op.size(), "diagnostics: size mismatch");
  const VecXc e = pair.coeffs.segment(0, op.n_e);
  const VecXc h = pair.coeffs.segment(op.n_e, op.n_h);

  const double e_tr = quad(op.mb_e, e);
  const double h_tr = quad(op.mb_h, h);
  const double e_hc = quad(op.hcurl_e, e);
  const double h_hc = quad(op.hcurl_h, h);

  BoundaryDiagnostics d;
  d.trace_ratio = (e_tr + h_tr) / (e_hc + h_hc);
  d.pec_defect = std::sqrt(std::max(0.0, e_tr)) + std::sqrt(std::max(0.0, h_tr));
  if (std::abs(pair.omega.imag()) < kRealEigenvalueTol &&
      op.impedance.has_coercive_real_part())
  {
    d.real_eigenvalue_flag = d.pec_defect > pec_defect_tol;
  }
  return d;
}

}  // namespace dissipax
