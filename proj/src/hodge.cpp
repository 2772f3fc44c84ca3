// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/hodge.hpp"

namespace dissipax
{

HodgeProjector::HodgeProjector(const BoxMesh &mesh,
                               const std::vector<MaterialTensor> &xi)
{
  grad_ = discrete_gradient(mesh);
  const SparseForm m = assemble_mass(mesh, xi);
  // xi is real symmetric, so the mass matrix is real.
  mass_real_ = m.mat.real();
  gm_ = SpMatD(grad_.transpose() * mass_real_);
  if (grad_.cols() > 0)
  {
    const SpMatD lap = SpMatD(gm_ * grad_);
    laplacian_.compute(lap);
    DX_VERIFY(laplacian_.info() == Eigen::Success,
              "weighted nodal Laplacian factorization failed");
  }
}

VecXc HodgeProjector::gradient_part(const VecXc &u) const
{
  DX_VERIFY(u.size() == mass_real_.rows(), "hodge_project: size mismatch");
  DX_VERIFY(u.allFinite(), "hodge_project: input must be finite");
  if (grad_.cols() == 0)
  {
    return VecXc::Zero(u.size());
  }
  const VecXc rhs = gm_ * u;
  VecXd pr = laplacian_.solve(rhs.real());
  VecXd pi = laplacian_.solve(rhs.imag());
  DX_VERIFY(laplacian_.info() == Eigen::Success, "hodge solve failed");
  VecXc p = pr.cast<Complex>() + Complex(0, 1) * pi.cast<Complex>();
  return grad_ * p;
}

VecXc HodgeProjector::project(const VecXc &u) const
{
  return u - gradient_part(u);
}

void HodgeProjector::project_inplace(VecXc &u) const
{
  if (grad_.cols() == 0)
  {
    return;
  }
  u -= gradient_part(u);
}

HodgeSplit hodge_project(const BoxMesh &mesh, const std::vector<MaterialTensor> &xi,
                         const VecXc &u)
{
  HodgeProjector proj(mesh, xi);
  HodgeSplit s;
  s.gradient_part = proj.gradient_part(u);
  s.divfree_part = u - s.gradient_part;
  return s;
}

}  // namespace dissipax
