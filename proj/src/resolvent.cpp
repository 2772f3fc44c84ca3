// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/resolvent.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

namespace dissipax
{

ResolventResult resolvent_solve(const OperatorPair &op, Complex omega,
                                const VecXc &f)
{
  DX_VERIFY(omega.imag() > 0.0,
            "resolvent_solve requires Im omega > 0 (m-dissipativity region)");
  DX_VERIFY(std::abs(omega) > 1e-8, "resolvent_solve: omega too close to zero");
  DX_VERIFY(!op.impedance.is_pec(), "resolvent_solve expects an impedance variant");
  DX_VERIFY(f.size() == op.size(), "resolvent_solve: rhs size mismatch");
  const BoxMesh &mesh = *op.mesh;
  const int ne = op.n_e;
  const int nh = op.n_h;
  DX_VERIFY(nh <= 2500, "resolvent_solve is a verification op for small meshes");

  const VecXc f1 = f.segment(0, ne);
  const VecXc f2 = f.segment(ne, nh);

  const SparseForm m_eps = assemble_mass(mesh, op.field.eps);
  const SparseForm m_mu = assemble_mass(mesh, op.field.mu);
  const SparseForm kf = assemble_curl_pairing(mesh);
  const SparseForm bz = assemble_boundary_form(mesh, op.impedance);
  const SpMatD m_eps_r = m_eps.mat.real();
  const SpMatD k_r = kf.mat.real();

  // Dense Schur complement K^T M_eps^{-1} K via the sparse Cholesky of the
  // mass matrix applied to the columns of K.
  Eigen::SimplicialLLT<SpMatD> mass_llt(m_eps_r);
  DX_VERIFY(mass_llt.info() == Eigen::Success, "mass factorization failed");
  const Eigen::MatrixXd kd = Eigen::MatrixXd(k_r);
  const Eigen::MatrixXd minvk = mass_llt.solve(kd);
  const Eigen::MatrixXd schur = kd.transpose() * minvk;

  const Complex iu(0.0, 1.0);
  Eigen::MatrixXcd bmat = (iu / omega) * schur.cast<Complex>();
  bmat += Eigen::MatrixXcd(-iu * omega * m_mu.mat + bz.mat);

  // rhs_i = -(1/omega) (f^1, curl phi_i) - i (mu f^2, phi_i)
  const VecXc rhs = -(1.0 / omega) * (k_r.transpose() * f1) - iu * (m_mu.mat * f2);

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(bmat);
  const VecXc h = lu.solve(rhs);

  // E = omega^{-1} (f^1 + i eps^{-1} curl H), curl H projected through M_eps.
  VecXd kr_re = k_r * h.real();
  VecXd kr_im = k_r * h.imag();
  VecXc minv_kh = mass_llt.solve(kr_re).cast<Complex>() +
                  iu * mass_llt.solve(kr_im).cast<Complex>();
  const VecXc e = (f1 + iu * minv_kh) / omega;

  ResolventResult res;
  res.x.resize(ne + nh);
  res.x.segment(0, ne) = e;
  res.x.segment(ne, nh) = h;

  const VecXc bf = op.b.mat * f;
  const VecXc lhs = omega * (op.b.mat * res.x) - op.a.mat * res.x;
  const double bf_norm = bf.norm();
  res.residual = bf_norm > 0.0 ? (lhs - bf).norm() / bf_norm : (lhs - bf).norm();
  return res;
}

}  // namespace dissipax
