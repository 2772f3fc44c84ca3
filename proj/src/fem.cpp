// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/fem.hpp"

#include <cmath>
#include <random>

namespace dissipax
{

namespace
{

double l01(int b, double t) { return b == 0 ? 1.0 - t : t; }
double dl01(int b) { return b == 0 ? -1.0 : 1.0; }

// 2-point Gauss on [0,1].
constexpr double kGaussOff = 0.28867513459481287;  // 1/(2*sqrt(3))
const double kGaussPts[2] = {0.5 - kGaussOff, 0.5 + kGaussOff};

}  // namespace

namespace edge_basis
{

Eigen::Vector3d value(int m, const Eigen::Vector3d &xh, double hx, double hy,
                      double hz)
{
  if (m < 4)
  {
    const int b = m & 1, c = m >> 1;
    return {l01(b, xh.y()) * l01(c, xh.z()) / hx, 0.0, 0.0};
  }
  if (m < 8)
  {
    const int a = (m - 4) & 1, c = (m - 4) >> 1;
    return {0.0, l01(a, xh.x()) * l01(c, xh.z()) / hy, 0.0};
  }
  const int a = (m - 8) & 1, b = (m - 8) >> 1;
  return {0.0, 0.0, l01(a, xh.x()) * l01(b, xh.y()) / hz};
}

Eigen::Vector3d curl(int m, const Eigen::Vector3d &xh, double hx, double hy,
                     double hz)
{
  if (m < 4)
  {
    const int b = m & 1, c = m >> 1;
    return {0.0, l01(b, xh.y()) * dl01(c) / (hx * hz),
            -dl01(b) * l01(c, xh.z()) / (hx * hy)};
  }
  if (m < 8)
  {
    const int a = (m - 4) & 1, c = (m - 4) >> 1;
    return {-l01(a, xh.x()) * dl01(c) / (hy * hz), 0.0,
            dl01(a) * l01(c, xh.z()) / (hy * hx)};
  }
  const int a = (m - 8) & 1, b = (m - 8) >> 1;
  return {l01(a, xh.x()) * dl01(b) / (hz * hy),
          -dl01(a) * l01(b, xh.y()) / (hz * hx), 0.0};
}

}  // namespace edge_basis

namespace
{

using Local12 = Eigen::Matrix<double, 12, 12>;

template <typename Eval>
Local12 local_pairing(const BoxMesh &mesh, const Eigen::Matrix3d &xi, Eval &&left,
                      Eval &&right)
{
  const double hx = mesh.hx(), hy = mesh.hy(), hz = mesh.hz();
  const double jac = hx * hy * hz;
  Local12 loc = Local12::Zero();
  for (int qz = 0; qz < 2; ++qz)
    for (int qy = 0; qy < 2; ++qy)
      for (int qx = 0; qx < 2; ++qx)
      {
        const Eigen::Vector3d xh(kGaussPts[qx], kGaussPts[qy], kGaussPts[qz]);
        Eigen::Matrix<double, 3, 12> lv, rv;
        for (int m = 0; m < 12; ++m)
        {
          lv.col(m) = left(m, xh, hx, hy, hz);
          rv.col(m) = right(m, xh, hx, hy, hz);
        }
        // weight 1/8 per point * cell volume
        loc += (jac / 8.0) * lv.transpose() * xi * rv;
      }
  return loc;
}

SparseForm assemble_cellwise(const BoxMesh &mesh,
                             const std::vector<MaterialTensor> &xi, bool use_curl,
                             FormSymmetry sym)
{
  DX_VERIFY(static_cast<int>(xi.size()) == mesh.n_cells(),
            "material field size must match the cell count");
  const int n = mesh.n_edges();
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(static_cast<std::size_t>(mesh.n_cells()) * 144);
  for (int ck = 0; ck < mesh.nz(); ++ck)
    for (int cj = 0; cj < mesh.ny(); ++cj)
      for (int ci = 0; ci < mesh.nx(); ++ci)
      {
        const int c = mesh.cell_id(ci, cj, ck);
        const Eigen::Matrix3d ximat = xi[c].full();
        const Local12 loc =
            use_curl ? local_pairing(mesh, ximat, edge_basis::curl, edge_basis::curl)
                     : local_pairing(mesh, ximat, edge_basis::value,
                                     edge_basis::value);
        const auto edges = mesh.cell_edges(ci, cj, ck);
        for (int i = 0; i < 12; ++i)
          for (int j = 0; j < 12; ++j)
            trip.emplace_back(edges[i], edges[j], Complex(loc(i, j), 0.0));
      }
  SparseForm f;
  f.mat.resize(n, n);
  f.mat.setFromTriplets(trip.begin(), trip.end());
  f.mat.makeCompressed();
  f.symmetry = sym;
  return f;
}

}  // namespace

bool SparseForm::consistent(double drop_tol) const
{
  if (symmetry == FormSymmetry::general)
    return true;
  const SpMatC diff = SpMatC(mat.adjoint()) - mat;
  double scale = 0.0;
  for (int k = 0; k < mat.outerSize(); ++k)
    for (SpMatC::InnerIterator it(mat, k); it; ++it)
      scale = std::max(scale, std::abs(it.value()));
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SpMatC::InnerIterator it(diff, k); it; ++it)
      if (std::abs(it.value()) > drop_tol * std::max(1.0, scale))
        return false;
  if (symmetry == FormSymmetry::hermitian_pd)
  {
    for (int i = 0; i < mat.rows(); ++i)
      if (!(mat.coeff(i, i).real() > 0.0))
        return false;
    std::mt19937_64 rng(0x5eed5eedULL);
    std::normal_distribution<double> dist;
    for (int t = 0; t < 4; ++t)
    {
      VecXc v(mat.cols());
      for (int i = 0; i < v.size(); ++i)
        v(i) = Complex(dist(rng), dist(rng));
      const Complex q = v.dot(mat * v);
      if (!(q.real() > 0.0))
        return false;
    }
  }
  return true;
}

SparseForm assemble_mass(const BoxMesh &mesh, const std::vector<MaterialTensor> &xi)
{
  return assemble_cellwise(mesh, xi, false, FormSymmetry::hermitian_pd);
}

SparseForm assemble_curlcurl(const BoxMesh &mesh,
                             const std::vector<MaterialTensor> &xi)
{
  return assemble_cellwise(mesh, xi, true, FormSymmetry::hermitian);
}

SparseForm assemble_curl_pairing(const BoxMesh &mesh)
{
  const int n = mesh.n_edges();
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(static_cast<std::size_t>(mesh.n_cells()) * 144);
  const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
  for (int ck = 0; ck < mesh.nz(); ++ck)
    for (int cj = 0; cj < mesh.ny(); ++cj)
      for (int ci = 0; ci < mesh.nx(); ++ci)
      {
        // K[i,j] = int <curl phi_j, phi_i>
        const Local12 loc =
            local_pairing(mesh, id, edge_basis::value, edge_basis::curl);
        const auto edges = mesh.cell_edges(ci, cj, ck);
        for (int i = 0; i < 12; ++i)
          for (int j = 0; j < 12; ++j)
            trip.emplace_back(edges[i], edges[j], Complex(loc(i, j), 0.0));
      }
  SparseForm f;
  f.mat.resize(n, n);
  f.mat.setFromTriplets(trip.begin(), trip.end());
  f.mat.makeCompressed();
  f.symmetry = FormSymmetry::general;
  return f;
}

SpMatD boundary_trace_mass(const BoxMesh &mesh)
{
  const int n = mesh.n_edges();
  std::vector<Eigen::Triplet<double>> trip;
  // 1-D overlap integrals of the hat pair on [0,1]
  const double m_same = 1.0 / 3.0, m_diff = 1.0 / 6.0;
  for (const auto &bf : mesh.boundary_faces())
  {
    // two edges along the first in-plane axis (transverse offsets 0, 1),
    // then two along the second
    const double wu = bf.hv / bf.hu;
    const double wv = bf.hu / bf.hv;
    const double mm[2][2] = {{m_same, m_diff}, {m_diff, m_same}};
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp)
      {
        trip.emplace_back(bf.edges[b], bf.edges[bp], wu * mm[b][bp]);
        trip.emplace_back(bf.edges[2 + b], bf.edges[2 + bp], wv * mm[b][bp]);
      }
  }
  SpMatD m(n, n);
  m.setFromTriplets(trip.begin(), trip.end());
  m.makeCompressed();
  return m;
}

SparseForm assemble_boundary_form(const BoxMesh &mesh, const ImpedanceSpec &z)
{
  DX_VERIFY(!z.is_pec(), "pec has no boundary form; boundary DOFs are eliminated");
  const int n = mesh.n_edges();
  SparseForm f;
  f.mat.resize(n, n);

  if (z.kind == ImpedanceSpec::Kind::matrix)
  {
    const auto &bedges = mesh.boundary_edges();
    const int nb = static_cast<int>(bedges.size());
    DX_VERIFY(z.zmat.rows() == nb,
              "matrix impedance dimension must equal the boundary-edge count");
    // B_Z = Mb * Zmat in the boundary-edge basis, embedded into edge DOFs.
    const SpMatD mb = boundary_trace_mass(mesh);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < nb; ++i)
      pos[bedges[i]] = i;
    Eigen::MatrixXcd mb_b(nb, nb);
    mb_b.setZero();
    for (int k = 0; k < mb.outerSize(); ++k)
      for (SpMatD::InnerIterator it(mb, k); it; ++it)
        mb_b(pos[it.row()], pos[it.col()]) = it.value();
    const Eigen::MatrixXcd bz = mb_b * z.zmat;
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        if (bz(i, j) != Complex(0.0, 0.0))
          trip.emplace_back(bedges[i], bedges[j], bz(i, j));
    f.mat.setFromTriplets(trip.begin(), trip.end());
    f.mat.makeCompressed();
    f.symmetry = FormSymmetry::general;
    return f;
  }

  std::vector<Eigen::Triplet<Complex>> trip;
  const double m_same = 1.0 / 3.0, m_diff = 1.0 / 6.0;
  const double mm[2][2] = {{m_same, m_diff}, {m_diff, m_same}};
  for (const auto &bf : mesh.boundary_faces())
  {
    const Complex a = z.coefficient_on(static_cast<int>(bf.side));
    const double wu = bf.hv / bf.hu;
    const double wv = bf.hu / bf.hv;
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp)
      {
        trip.emplace_back(bf.edges[b], bf.edges[bp], a * wu * mm[b][bp]);
        trip.emplace_back(bf.edges[2 + b], bf.edges[2 + bp], a * wv * mm[b][bp]);
      }
  }
  f.mat.setFromTriplets(trip.begin(), trip.end());
  f.mat.makeCompressed();
  const bool real_sym = std::abs(z.coefficient_on(0).imag()) == 0.0 &&
                        z.kind == ImpedanceSpec::Kind::scalar_constant;
  f.symmetry = real_sym ? FormSymmetry::hermitian : FormSymmetry::general;
  return f;
}

SpMatD discrete_gradient(const BoxMesh &mesh)
{
  const auto &ivs = mesh.interior_vertices();
  std::vector<int> col_of(mesh.n_vertices(), -1);
  for (std::size_t c = 0; c < ivs.size(); ++c)
    col_of[ivs[c]] = static_cast<int>(c);
  std::vector<Eigen::Triplet<double>> trip;
  for (int e = 0; e < mesh.n_edges(); ++e)
  {
    const auto vs = mesh.edge_vertices(e);
    if (col_of[vs[0]] >= 0)
      trip.emplace_back(e, col_of[vs[0]], -1.0);
    if (col_of[vs[1]] >= 0)
      trip.emplace_back(e, col_of[vs[1]], 1.0);
  }
  SpMatD g(mesh.n_edges(), static_cast<int>(ivs.size()));
  g.setFromTriplets(trip.begin(), trip.end());
  g.makeCompressed();
  return g;
}

}  // namespace dissipax
