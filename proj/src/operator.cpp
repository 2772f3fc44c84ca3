// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/operator.hpp"

#include <sstream>

#include "dissipax/kernels.hpp"

namespace dissipax
{

namespace
{

// Extracts rows/cols of a sparse matrix by index maps (-1 drops the entry).
SpMatC remap(const SpMatC &m, const std::vector<int> &row_map,
             const std::vector<int> &col_map, int rows, int cols,
             int row_off = 0, int col_off = 0)
{
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(static_cast<std::size_t>(m.nonZeros()));
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMatC::InnerIterator it(m, k); it; ++it)
    {
      const int r = row_map[it.row()];
      const int c = col_map[it.col()];
      if (r >= 0 && c >= 0)
        trip.emplace_back(r + row_off, c + col_off, it.value());
    }
  SpMatC out(rows, cols);
  out.setFromTriplets(trip.begin(), trip.end());
  out.makeCompressed();
  return out;
}

SpMatD remap_real(const SpMatD &m, const std::vector<int> &map, int n)
{
  std::vector<Eigen::Triplet<double>> trip;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMatD::InnerIterator it(m, k); it; ++it)
    {
      const int r = map[it.row()];
      const int c = map[it.col()];
      if (r >= 0 && c >= 0)
        trip.emplace_back(r, c, it.value());
    }
  SpMatD out(n, n);
  out.setFromTriplets(trip.begin(), trip.end());
  out.makeCompressed();
  return out;
}

}  // namespace

VecXc OperatorPair::expand_e(const VecXc &e_reduced) const
{
  DX_VERIFY(e_reduced.size() == n_e, "expand_e: size mismatch");
  VecXc full = VecXc::Zero(mesh->n_edges());
  for (std::size_t i = 0; i < kept_e.size(); ++i)
    full(kept_e[i]) = e_reduced(static_cast<int>(i));
  return full;
}

void OperatorPair::deflate(VecXc &x) const
{
  DX_VERIFY(x.size() == size(), "deflate: size mismatch");
  if (impedance.is_pec())
  {
    // Boundary rows of G vanish (interior vertices touch no boundary edge),
    // so projecting the expanded vector and restricting back is exact.
    VecXc ef = expand_e(x.segment(0, n_e));
    proj_e->project_inplace(ef);
    for (std::size_t i = 0; i < kept_e.size(); ++i)
      x(static_cast<int>(i)) = ef(kept_e[i]);
  }
  else
  {
    VecXc e = x.segment(0, n_e);
    proj_e->project_inplace(e);
    x.segment(0, n_e) = e;
  }
  VecXc h = x.segment(n_e, n_h);
  proj_h->project_inplace(h);
  x.segment(n_e, n_h) = h;
}

OperatorPair assemble_maxwell(const std::shared_ptr<const BoxMesh> &mesh,
                              const MaterialField &field, const ImpedanceSpec &z)
{
  DX_VERIFY(mesh != nullptr, "assemble_maxwell: mesh required");
  DX_VERIFY(static_cast<int>(field.eps.size()) == mesh->n_cells() &&
                static_cast<int>(field.mu.size()) == mesh->n_cells(),
            "material field must match the mesh cell count");
  DX_VERIFY(field.admissible(), "material field violates its admissibility bounds");
  z.validate();

  const int ne_all = mesh->n_edges();
  OperatorPair op;
  op.mesh = mesh;
  op.field = field;
  op.impedance = z;

  // E-block index set: all edges, or interior edges under pec.
  op.e_pos.assign(ne_all, -1);
  if (z.is_pec())
  {
    for (int e = 0; e < ne_all; ++e)
      if (!mesh->edge_on_boundary(e))
      {
        op.e_pos[e] = static_cast<int>(op.kept_e.size());
        op.kept_e.push_back(e);
      }
  }
  else
  {
    op.kept_e.resize(ne_all);
    for (int e = 0; e < ne_all; ++e)
    {
      op.kept_e[e] = e;
      op.e_pos[e] = e;
    }
  }
  op.n_e = static_cast<int>(op.kept_e.size());
  op.n_h = ne_all;

  std::vector<int> identity_map(ne_all);
  for (int e = 0; e < ne_all; ++e)
    identity_map[e] = e;

  const SparseForm m_eps = assemble_mass(*mesh, field.eps);
  const SparseForm m_mu = assemble_mass(*mesh, field.mu);
  const SparseForm k = assemble_curl_pairing(*mesh);

  const int n = op.n_e + op.n_h;
  const Complex iu(0.0, 1.0);

  // A = [[0, iK], [-iK^T, -i B_Z]] in block coordinates.
  std::vector<Eigen::Triplet<Complex>> atrip;
  for (int kk = 0; kk < k.mat.outerSize(); ++kk)
    for (SpMatC::InnerIterator it(k.mat, kk); it; ++it)
    {
      // entry K[r,c] lands at (E-row r, H-col c) in iK and, transposed,
      // at (H-row c, E-col r) in -iK^T
      const int er = op.e_pos[it.row()];
      if (er >= 0)
      {
        atrip.emplace_back(er, op.n_e + static_cast<int>(it.col()),
                           iu * it.value());
        atrip.emplace_back(op.n_e + static_cast<int>(it.col()), er,
                           -iu * it.value());
      }
    }
  if (!z.is_pec())
  {
    const SparseForm bz = assemble_boundary_form(*mesh, z);
    for (int kk = 0; kk < bz.mat.outerSize(); ++kk)
      for (SpMatC::InnerIterator it(bz.mat, kk); it; ++it)
        atrip.emplace_back(op.n_e + static_cast<int>(it.row()),
                           op.n_e + static_cast<int>(it.col()), -iu * it.value());
  }
  op.a.mat.resize(n, n);
  op.a.mat.setFromTriplets(atrip.begin(), atrip.end());
  op.a.mat.makeCompressed();
  op.a.symmetry = (z.is_pec() || z.kind == ImpedanceSpec::Kind::selfadjoint_ic)
                      ? FormSymmetry::hermitian
                      : FormSymmetry::general;

  // B = diag(M_eps, M_mu).
  std::vector<Eigen::Triplet<Complex>> btrip;
  for (int kk = 0; kk < m_eps.mat.outerSize(); ++kk)
    for (SpMatC::InnerIterator it(m_eps.mat, kk); it; ++it)
    {
      const int r = op.e_pos[it.row()];
      const int c = op.e_pos[it.col()];
      if (r >= 0 && c >= 0)
        btrip.emplace_back(r, c, it.value());
    }
  for (int kk = 0; kk < m_mu.mat.outerSize(); ++kk)
    for (SpMatC::InnerIterator it(m_mu.mat, kk); it; ++it)
      btrip.emplace_back(op.n_e + static_cast<int>(it.row()),
                         op.n_e + static_cast<int>(it.col()), it.value());
  op.b.mat.resize(n, n);
  op.b.mat.setFromTriplets(btrip.begin(), btrip.end());
  op.b.mat.makeCompressed();
  op.b.symmetry = FormSymmetry::hermitian_pd;

  op.proj_e = std::make_shared<HodgeProjector>(*mesh, field.eps);
  op.proj_h = std::make_shared<HodgeProjector>(*mesh, field.mu);

  // Diagnostic Gram matrices in block coordinates.
  const SpMatD mb = boundary_trace_mass(*mesh);
  const SparseForm m1 = assemble_mass(*mesh, std::vector<MaterialTensor>(
                                                 mesh->n_cells(),
                                                 MaterialTensor::identity()));
  const SparseForm s1 = assemble_curlcurl(*mesh, std::vector<MaterialTensor>(
                                                     mesh->n_cells(),
                                                     MaterialTensor::identity()));
  const SpMatD hcurl_full = m1.mat.real() + s1.mat.real();
  op.mb_e = remap_real(mb, op.e_pos, op.n_e);
  op.mb_h = mb;
  op.hcurl_e = remap_real(hcurl_full, op.e_pos, op.n_e);
  op.hcurl_h = hcurl_full;

  std::ostringstream prov;
  prov << "mesh " << mesh->nx() << "x" << mesh->ny() << "x" << mesh->nz() << " box "
       << mesh->lx() << "x" << mesh->ly() << "x" << mesh->lz() << "; Z "
       << z.describe();
  op.provenance = prov.str();
  return op;
}

Complex rayleigh_quotient(const OperatorPair &op, const VecXc &x)
{
  DX_VERIFY(x.size() == op.size(), "rayleigh_quotient: size mismatch");
  const double nrm = kernels::cnrm2sq(x);
  DX_VERIFY(nrm > 0.0, "rayleigh_quotient: zero vector");
  const VecXc ax = op.a.mat * x;
  const VecXc bx = op.b.mat * x;
  const std::size_t n = static_cast<std::size_t>(x.size());
  const Complex num = kernels::cdotc(n, x.data(), ax.data());
  const Complex den = kernels::cdotc(n, x.data(), bx.data());
  return num / den;
}

}  // namespace dissipax
