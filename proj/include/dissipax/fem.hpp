// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_FEM_HPP
#define DISSIPAX_FEM_HPP

#include <vector>

#include "dissipax/impedance.hpp"
#include "dissipax/materials.hpp"
#include "dissipax/mesh.hpp"

namespace dissipax
{

enum class FormSymmetry
{
  hermitian_pd,
  hermitian,
  general
};

/// Assembled sesquilinear form. Assembly sums cell contributions in a fixed
/// cell order, so entries are reproducible across runs.
struct SparseForm
{
  SpMatC mat;
  FormSymmetry symmetry = FormSymmetry::general;

  int rows() const { return static_cast<int>(mat.rows()); }
  int cols() const { return static_cast<int>(mat.cols()); }

  /// Checks the symmetry tag: hermitian forms within drop_tol, hermitian_pd
  /// additionally has positive real diagonal and positive Rayleigh quotients
  /// on a few deterministic random vectors.
  bool consistent(double drop_tol = 1e-12) const;
};

/// Lowest-order edge basis on the reference cell [0,1]^3 scaled to a physical
/// cell (hx, hy, hz). Local edge order matches BoxMesh::cell_edges.
namespace edge_basis
{
/// Value of basis function m at local coordinates xh in [0,1]^3.
Eigen::Vector3d value(int m, const Eigen::Vector3d &xh, double hx, double hy,
                      double hz);
/// Curl of basis function m (constant in the edge direction, bilinear
/// transversally).
Eigen::Vector3d curl(int m, const Eigen::Vector3d &xh, double hx, double hy,
                     double hz);
}  // namespace edge_basis

/// Mass form M_xi[i,j] = int <xi phi_j, phi_i> dx with cellwise-constant xi;
/// 2x2x2 Gauss per cell is exact for these integrands.
SparseForm assemble_mass(const BoxMesh &mesh, const std::vector<MaterialTensor> &xi);

/// Weighted curl-curl form S_xi[i,j] = int <xi curl phi_j, curl phi_i> dx.
SparseForm assemble_curlcurl(const BoxMesh &mesh,
                             const std::vector<MaterialTensor> &xi);

/// Curl pairing K[i,j] = int <curl phi_j, phi_i> dx (real entries).
SparseForm assemble_curl_pairing(const BoxMesh &mesh);

/// Lowest-order face (Raviart-Thomas) basis on a cell; local face order
/// x0,x1,y0,y1,z0,z1 matching BoxMesh::cell_faces. DOFs are face fluxes
/// along the positive axes, so curls of edge functions have face
/// coefficients given exactly by the integer incidence BoxMesh::curl_incidence.
namespace face_basis
{
Eigen::Vector3d value(int m, const Eigen::Vector3d &xh, double hx, double hy,
                      double hz);
}

/// Face mass M_f(xi)[f,g] = int <xi w_g, w_f> dx with cellwise-constant xi.
SparseForm assemble_face_mass(const BoxMesh &mesh,
                              const std::vector<MaterialTensor> &xi);

/// Boundary quadratic form of the tangential trace of xi-weighted face
/// fields: b^H T b = int_dOmega |(xi B)_tan|^2 ds. Used for H_tan diagnostics
/// with xi = mu^{-1} cellwise.
SpMatD boundary_flux_tangential_form(const BoxMesh &mesh,
                                     const std::vector<MaterialTensor> &xi);

/// Rotation pairing on boundary edge traces, Rb[i,j] = int <n x phi_j_tan,
/// phi_i_tan> ds with the outward normal; skew-symmetric, supported on
/// boundary edges. Needed to express the matrix-variant admittance.
SpMatD boundary_rotation_pairing(const BoxMesh &mesh);

/// Boundary form B_Z[i,j] = int_dOmega <Z phi_j_tan, phi_i_tan> ds over
/// boundary-edge DOFs; rows/columns of interior edges are zero. Scalar
/// variants act facewise as pointwise multiplication; the matrix variant is
/// given in the boundary-edge trace basis (ascending edge id) and yields
/// B_Z = Mb * Zmat with Mb the boundary trace mass.
SparseForm assemble_boundary_form(const BoxMesh &mesh, const ImpedanceSpec &z);

/// Boundary trace mass (the Z = 1 boundary form), real symmetric PSD.
SpMatD boundary_trace_mass(const BoxMesh &mesh);

/// Discrete gradient: interior-vertex nodal coefficients -> edge
/// coefficients, entries exactly +-1 in the Whitney line-integral convention.
/// Columns follow BoxMesh::interior_vertices() order.
SpMatD discrete_gradient(const BoxMesh &mesh);

}  // namespace dissipax

#endif  // DISSIPAX_FEM_HPP
