// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_HODGE_HPP
#define DISSIPAX_HODGE_HPP

#include <memory>

#include <Eigen/SparseCholesky>

#include "dissipax/fem.hpp"

namespace dissipax
{

/// Discrete weighted Helmholtz-Hodge splitting on the box: edge coefficients
/// u decompose as u = G p + r with p solving (xi grad p, grad q) = (xi u,
/// grad q) for interior nodal test functions q, and the remainder r
/// xi-divergence-free in the sense G^H M_xi r = 0. The two parts are
/// M_xi-orthogonal. On a box the boundary is connected and the domain simply
/// connected, so no cohomology component appears.
class HodgeProjector
{
public:
  HodgeProjector(const BoxMesh &mesh, const std::vector<MaterialTensor> &xi);

  /// gradient part G p of u.
  VecXc gradient_part(const VecXc &u) const;

  /// u minus its gradient part (idempotent on divergence-free input).
  VecXc project(const VecXc &u) const;

  /// In-place removal of the gradient component.
  void project_inplace(VecXc &u) const;

  int n_edges() const { return static_cast<int>(mass_real_.rows()); }
  int n_interior_vertices() const { return static_cast<int>(grad_.cols()); }

  const SpMatD &gradient() const { return grad_; }
  const SpMatD &mass() const { return mass_real_; }

private:
  SpMatD grad_;       // E x Vi incidence
  SpMatD mass_real_;  // real mass matrix M_xi
  SpMatD gm_;         // G^T M_xi
  Eigen::SimplicialLDLT<SpMatD> laplacian_;
};

struct HodgeSplit
{
  VecXc gradient_part;
  VecXc divfree_part;
};

/// One-shot interface over HodgeProjector.
HodgeSplit hodge_project(const BoxMesh &mesh, const std::vector<MaterialTensor> &xi,
                         const VecXc &u);

}  // namespace dissipax

#endif  // DISSIPAX_HODGE_HPP
