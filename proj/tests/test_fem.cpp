// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <doctest.h>

#include "dissipax/fem.hpp"
#include "dissipax/scan.hpp"

#include <Eigen/SparseCholesky>

using namespace dissipax;

namespace
{

// Independent quadrature oracle: integrates <xi a(x), b(x)> over one cell with
// a 4x4x4 Gauss rule and direct basis evaluation; exceeds the degree of every
// integrand assembled from the lowest-order edge basis.
double cell_integral_oracle(const BoxMesh &mesh, const Eigen::Matrix3d &xi, int mi,
                            int mj, bool curl_left, bool curl_right)
{
  static const double pts[4] = {0.069431844202973714, 0.33000947820757187,
                                0.66999052179242813, 0.93056815579702623};
  static const double wts[4] = {0.17392742256872692, 0.32607257743127305,
                                0.32607257743127305, 0.17392742256872692};
  const double hx = mesh.hx(), hy = mesh.hy(), hz = mesh.hz();
  double acc = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
      {
        const Eigen::Vector3d xh(pts[a], pts[b], pts[c]);
        const Eigen::Vector3d left =
            curl_left ? edge_basis::curl(mi, xh, hx, hy, hz)
                      : edge_basis::value(mi, xh, hx, hy, hz);
        const Eigen::Vector3d right =
            curl_right ? edge_basis::curl(mj, xh, hx, hy, hz)
                       : edge_basis::value(mj, xh, hx, hy, hz);
        acc += wts[a] * wts[b] * wts[c] * left.dot(xi * right);
      }
  return acc * hx * hy * hz;
}

std::vector<MaterialTensor> uniform_xi(const BoxMesh &mesh, const MaterialTensor &t)
{
  return std::vector<MaterialTensor>(static_cast<std::size_t>(mesh.n_cells()), t);
}

}  // namespace

TEST_CASE("single-cell mass matrix matches hand integration for xi = I")
{
  BoxMesh mesh(1, 1, 1, 1.0, 1.0, 1.0);
  const SparseForm m = assemble_mass(mesh, uniform_xi(mesh, MaterialTensor::identity()));
  REQUIRE(m.rows() == 12);

  // same-direction blocks: diag 1/9, one shared transverse coordinate 1/18,
  // none shared 1/36; cross-direction blocks vanish (orthogonal unit vectors)
  const Eigen::MatrixXcd dense = Eigen::MatrixXcd(m.mat);
  for (int dir = 0; dir < 3; ++dir)
  {
    const int off = 4 * dir;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
      {
        const int shared =
            (i % 2 == j % 2 ? 1 : 0) + (i / 2 == j / 2 ? 1 : 0);
        const double expected = shared == 2 ? 1.0 / 9 : (shared == 1 ? 1.0 / 18 : 1.0 / 36);
        CHECK(dense(off + i, off + j).real() == doctest::Approx(expected).epsilon(1e-14));
      }
  }
  // total of all entries = integral of |sum of basis|^2 = 3 (partition of unity)
  CHECK(dense.sum().real() == doctest::Approx(3.0).epsilon(1e-14));
  // row sums reproduce int <phi_i, sum_j phi_j> = 1/4 for the unit cube
  CHECK(dense.rowwise().sum()(0).real() == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("mass matrix is linear in xi and matches the quadrature oracle")
{
  BoxMesh mesh(1, 1, 1, 0.7, 1.1, 1.9);
  const SparseForm m1 = assemble_mass(mesh, uniform_xi(mesh, MaterialTensor::identity()));
  const SparseForm m2 =
      assemble_mass(mesh, uniform_xi(mesh, MaterialTensor::isotropic(2.0)));
  CHECK((Eigen::MatrixXcd(m2.mat) - 2.0 * Eigen::MatrixXcd(m1.mat)).norm() < 1e-14);

  std::mt19937_64 rng(3);
  const MaterialTensor xi = RandomFieldSampler::random_tensor(rng, 1.0, 4.0);
  const SparseForm m = assemble_mass(mesh, uniform_xi(mesh, xi));
  const Eigen::MatrixXcd dense = Eigen::MatrixXcd(m.mat);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
    {
      const double oracle = cell_integral_oracle(mesh, xi.full(), i, j, false, false);
      CHECK(dense(i, j).real() == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("random admissible mass matrices are Hermitian positive definite")
{
  BoxMesh mesh(3, 2, 2, 1.0, 1.3, 0.8);
  std::mt19937_64 rng(17);
  std::vector<MaterialTensor> xi(static_cast<std::size_t>(mesh.n_cells()));
  for (auto &t : xi)
    t = RandomFieldSampler::random_tensor(rng, 1.0, 11.68);
  const SparseForm m = assemble_mass(mesh, xi);
  CHECK(m.symmetry == FormSymmetry::hermitian_pd);
  CHECK(m.consistent());
  Eigen::SimplicialLLT<SpMatD> llt(SpMatD(m.mat.real()));
  CHECK(llt.info() == Eigen::Success);
}

TEST_CASE("curl pairing matches the quadrature oracle on a stretched cell")
{
  BoxMesh mesh(1, 1, 1, 0.9, 1.4, 2.2);
  const SparseForm k = assemble_curl_pairing(mesh);
  const Eigen::MatrixXcd dense = Eigen::MatrixXcd(k.mat);
  const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
    {
      // K[i,j] = int <curl phi_j, phi_i>
      const double oracle = cell_integral_oracle(mesh, id, i, j, false, true);
      CHECK(dense(i, j).real() == doctest::Approx(oracle).epsilon(1e-12));
      CHECK(dense(i, j).imag() == 0.0);
    }
}

TEST_CASE("curl pairing kills discrete gradients: K G = 0")
{
  for (auto dims : {std::array<int, 3>{1, 1, 1}, {2, 2, 2}, {3, 2, 4}})
  {
    BoxMesh mesh(dims[0], dims[1], dims[2], 1.0, 0.8, 1.7);
    const SparseForm k = assemble_curl_pairing(mesh);
    const SpMatD g = discrete_gradient(mesh);
    if (g.cols() == 0)
      continue;
    const Eigen::MatrixXcd kg = k.mat * g.cast<Complex>();
    CHECK(kg.norm() < 1e-13);
  }
}

TEST_CASE("assembly locality: refined mesh equals shifted single-cell blocks")
{
  // every cell of a uniform 2x2x2 mesh contributes the same 12x12 local block
  BoxMesh fine(2, 2, 2, 2.0, 2.0, 2.0);
  BoxMesh single(1, 1, 1, 1.0, 1.0, 1.0);
  const SparseForm k_fine = assemble_curl_pairing(fine);
  const SparseForm k_single = assemble_curl_pairing(single);
  const Eigen::MatrixXcd lk = Eigen::MatrixXcd(k_single.mat);

  Eigen::MatrixXcd accum = Eigen::MatrixXcd::Zero(fine.n_edges(), fine.n_edges());
  for (int ck = 0; ck < 2; ++ck)
    for (int cj = 0; cj < 2; ++cj)
      for (int ci = 0; ci < 2; ++ci)
      {
        const auto edges = fine.cell_edges(ci, cj, ck);
        for (int i = 0; i < 12; ++i)
          for (int j = 0; j < 12; ++j)
            accum(edges[i], edges[j]) += lk(i, j);
      }
  CHECK((accum - Eigen::MatrixXcd(k_fine.mat)).norm() < 1e-13);
}

TEST_CASE("discrete gradient structure")
{
  BoxMesh one(1, 1, 1, 1.0, 1.0, 1.0);
  CHECK(discrete_gradient(one).cols() == 0);

  BoxMesh two(2, 2, 2, 1.0, 1.0, 1.0);
  const SpMatD g = discrete_gradient(two);
  CHECK(g.cols() == 1);
  CHECK(g.nonZeros() == 6);
  for (int k = 0; k < g.outerSize(); ++k)
    for (SpMatD::InnerIterator it(g, k); it; ++it)
      CHECK(std::abs(it.value()) == 1.0);
}

TEST_CASE("boundary form for scalar impedance")
{
  BoxMesh mesh(2, 2, 2, 1.0, 1.0, 1.0);
  const SparseForm b1 =
      assemble_boundary_form(mesh, ImpedanceSpec::scalar_constant(1.0));

  // real symmetric positive semidefinite with kernel containing interior edges
  const Eigen::MatrixXcd dense = Eigen::MatrixXcd(b1.mat);
  CHECK((dense - dense.adjoint()).norm() < 1e-14);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense.real());
  CHECK(es.eigenvalues().minCoeff() > -1e-13);
  for (int e = 0; e < mesh.n_edges(); ++e)
    if (!mesh.edge_on_boundary(e))
      CHECK(dense.row(e).norm() == 0.0);

  // scalar linearity: Z = i c scales the Z = 1 form
  const SparseForm bi =
      assemble_boundary_form(mesh, ImpedanceSpec::scalar_constant(Complex(0, 2.5)));
  CHECK((Eigen::MatrixXcd(bi.mat) - Complex(0, 2.5) * dense).norm() < 1e-13);
}

TEST_CASE("per-face boundary form differs only on that face's couplings")
{
  BoxMesh mesh(2, 2, 2, 1.0, 1.0, 1.0);
  const SparseForm uniform =
      assemble_boundary_form(mesh, ImpedanceSpec::scalar_constant(1.0));
  std::array<Complex, 6> faces;
  faces.fill(Complex(1.0, 0.0));
  faces[static_cast<std::size_t>(BoxSide::zlo)] = Complex(2.0, 0.0);
  const SparseForm mixed =
      assemble_boundary_form(mesh, ImpedanceSpec::per_face_scalar(faces));

  const SpMatC diff = SpMatC(mixed.mat - uniform.mat);
  // every difference entry belongs to an edge pair on the zlo face
  std::vector<char> on_zlo(static_cast<std::size_t>(mesh.n_edges()), 0);
  for (const auto &bf : mesh.boundary_faces())
    if (bf.side == BoxSide::zlo)
      for (int e : bf.edges)
        on_zlo[static_cast<std::size_t>(e)] = 1;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SpMatC::InnerIterator it(diff, k); it; ++it)
      if (std::abs(it.value()) > 1e-15)
      {
        CHECK(on_zlo[static_cast<std::size_t>(it.row())]);
        CHECK(on_zlo[static_cast<std::size_t>(it.col())]);
      }
}

TEST_CASE("boundary form accretivity for sector-condition impedances")
{
  BoxMesh mesh(2, 2, 2, 1.0, 1.0, 1.0);
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss;
  for (const Complex a : {Complex(1.0, 0.0), Complex(1.0, 1.0), Complex(0.5, -0.4)})
  {
    const SparseForm bz = assemble_boundary_form(mesh, ImpedanceSpec::scalar_constant(a));
    for (int t = 0; t < 1000; ++t)
    {
      VecXc v(mesh.n_edges());
      for (int i = 0; i < v.size(); ++i)
        v(i) = Complex(gauss(rng), gauss(rng));
      const Complex q = v.dot(bz.mat * v);
      CHECK(q.real() >= -1e-12);
    }
  }
}

TEST_CASE("matrix impedance variant equals Mb times Zmat")
{
  BoxMesh mesh(1, 1, 1, 1.0, 1.0, 1.0);
  const int nb = static_cast<int>(mesh.boundary_edges().size());
  REQUIRE(nb == 12);
  // identity Zmat reproduces the Z = 1 boundary form
  const SparseForm b1 =
      assemble_boundary_form(mesh, ImpedanceSpec::scalar_constant(1.0));
  const SparseForm bm = assemble_boundary_form(
      mesh, ImpedanceSpec::matrix(Eigen::MatrixXcd::Identity(nb, nb)));
  CHECK((Eigen::MatrixXcd(b1.mat) - Eigen::MatrixXcd(bm.mat)).norm() < 1e-14);

  // dimension mismatch is rejected
  CHECK_THROWS_AS(assemble_boundary_form(
                      mesh, ImpedanceSpec::matrix(Eigen::MatrixXcd::Identity(5, 5))),
                  ValidationError);
}

TEST_CASE("impedance sector validation")
{
  CHECK_THROWS_AS(ImpedanceSpec::scalar_constant(Complex(0.0, 0.0)), ValidationError);
  // arg = pi (negative real) violates both sector branches
  CHECK_THROWS_AS(ImpedanceSpec::scalar_constant(Complex(-1.0, 0.0)), ValidationError);
  // purely imaginary passes exactly one branch
  CHECK_NOTHROW(ImpedanceSpec::scalar_constant(Complex(0.0, 1.0)));
  CHECK_NOTHROW(ImpedanceSpec::scalar_constant(Complex(0.0, -1.0)));
  CHECK(ImpedanceSpec::scalar_constant(Complex(1.0, 0.0)).has_coercive_real_part());
  CHECK_FALSE(ImpedanceSpec::selfadjoint_ic(1.0, -1).has_coercive_real_part());
}
