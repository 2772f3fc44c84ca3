// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <doctest.h>

#include "dissipax/operator.hpp"
#include "dissipax/scan.hpp"

using namespace dissipax;

namespace
{

VecXc random_vec(int n, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  VecXc v(n);
  for (int i = 0; i < n; ++i)
    v(i) = Complex(dist(rng), dist(rng));
  return v;
}

std::shared_ptr<const BoxMesh> make_mesh(int n, double len = 1.0)
{
  return std::make_shared<BoxMesh>(n, n, n, len, len, len);
}

MaterialField identity_field(const BoxMesh &mesh)
{
  return MaterialField::uniform(static_cast<std::size_t>(mesh.n_cells()),
                                MaterialTensor::identity(),
                                MaterialTensor::identity(), 1.0, 1.0);
}

}  // namespace

TEST_CASE("pec reference operator is Hermitian after boundary elimination")
{
  const auto mesh = make_mesh(2);
  const OperatorPair op =
      assemble_maxwell(mesh, identity_field(*mesh), ImpedanceSpec::pec());
  CHECK(op.n_e < mesh->n_edges());
  CHECK(op.n_h == mesh->n_edges());
  const Eigen::MatrixXcd a = Eigen::MatrixXcd(op.a.mat);
  CHECK((a - a.adjoint()).norm() < 1e-14 * std::max(1.0, a.norm()));
}

TEST_CASE("selfadjoint impedance yields a Hermitian pencil")
{
  const auto mesh = make_mesh(2);
  const OperatorPair op = assemble_maxwell(mesh, identity_field(*mesh),
                                           ImpedanceSpec::selfadjoint_ic(1.0, -1));
  const Eigen::MatrixXcd a = Eigen::MatrixXcd(op.a.mat);
  CHECK((a - a.adjoint()).norm() < 1e-14 * std::max(1.0, a.norm()));
}

TEST_CASE("exact discrete dissipativity identity")
{
  const auto mesh = make_mesh(2);
  std::mt19937_64 rng(31);
  MaterialField field;
  field.alpha = 1.0;
  field.beta = 11.68;
  field.eps.resize(mesh->n_cells());
  field.mu.resize(mesh->n_cells());
  for (int c = 0; c < mesh->n_cells(); ++c)
  {
    field.eps[c] = RandomFieldSampler::random_tensor(rng, 1.0, 11.68);
    field.mu[c] = RandomFieldSampler::random_tensor(rng, 1.0, 11.68);
  }

  for (const Complex a : {Complex(1.0, 0.0), Complex(1.0, 1.0)})
  {
    const ImpedanceSpec z = ImpedanceSpec::scalar_constant(a);
    const OperatorPair op = assemble_maxwell(mesh, field, z);
    const SparseForm bz = assemble_boundary_form(*mesh, z);
    for (int t = 0; t < 200; ++t)
    {
      const VecXc x = random_vec(op.size(), 1000 + t);
      const Complex q = x.dot(op.a.mat * x);
      const VecXc h = x.segment(op.n_e, op.n_h);
      const double boundary = (h.dot(bz.mat * h)).real();
      // Im(x^H A x) = -Re(h^H B_Z h)
      CHECK(q.imag() == doctest::Approx(-boundary).epsilon(1e-10));
      CHECK(q.imag() <= 1e-12 * std::abs(x.dot(op.b.mat * x)));
    }
  }
}

TEST_CASE("kernel vectors (G p, 0) are annihilated at machine precision")
{
  for (const ImpedanceSpec &z :
       {ImpedanceSpec::scalar_constant(1.0), ImpedanceSpec::pec()})
  {
    const auto mesh = make_mesh(3);
    const OperatorPair op = assemble_maxwell(mesh, identity_field(*mesh), z);
    const SpMatD g = discrete_gradient(*mesh);
    REQUIRE(g.cols() > 0);

    const double a_scale = Eigen::MatrixXcd(op.a.mat).norm();
    for (int t = 0; t < 20; ++t)
    {
      const VecXc p = random_vec(static_cast<int>(g.cols()), 40 + t);
      const VecXc grad_full = g.cast<Complex>() * p;
      VecXc x = VecXc::Zero(op.size());
      for (std::size_t i = 0; i < op.kept_e.size(); ++i)
        x(static_cast<int>(i)) = grad_full(op.kept_e[i]);
      const double res = (op.a.mat * x).norm();
      CHECK(res < 1e-13 * a_scale * p.norm());
    }
  }
}

TEST_CASE("interior H-gradients (0, G q) are annihilated")
{
  const auto mesh = make_mesh(3);
  const OperatorPair op = assemble_maxwell(mesh, identity_field(*mesh),
                                           ImpedanceSpec::scalar_constant(1.0));
  const SpMatD g = discrete_gradient(*mesh);
  const VecXc q = random_vec(static_cast<int>(g.cols()), 77);
  VecXc x = VecXc::Zero(op.size());
  x.segment(op.n_e, op.n_h) = g.cast<Complex>() * q;
  CHECK((op.a.mat * x).norm() < 1e-13 * q.norm() * Eigen::MatrixXcd(op.a.mat).norm());
}

TEST_CASE("rayleigh quotient sign and kernel behavior")
{
  const auto mesh = make_mesh(2);
  const OperatorPair op = assemble_maxwell(mesh, identity_field(*mesh),
                                           ImpedanceSpec::scalar_constant(1.0));

  // kernel gradient vector gives zero
  const SpMatD g = discrete_gradient(*mesh);
  VecXc x = VecXc::Zero(op.size());
  x.segment(0, op.n_e) = (g.cast<Complex>() * random_vec(1, 3)).eval();
  CHECK(std::abs(rayleigh_quotient(op, x)) < 1e-13);

  // random vectors: nonpositive imaginary part up to roundoff
  for (int t = 0; t < 100; ++t)
  {
    const VecXc v = random_vec(op.size(), 500 + t);
    const Complex q = rayleigh_quotient(op, v);
    CHECK(q.imag() <= 1e-12 * std::abs(q));
  }

  CHECK_THROWS_AS(rayleigh_quotient(op, VecXc::Zero(op.size())), ValidationError);
}

TEST_CASE("deflate removes gradient components in both blocks")
{
  const auto mesh = make_mesh(3);
  const OperatorPair op = assemble_maxwell(mesh, identity_field(*mesh),
                                           ImpedanceSpec::scalar_constant(1.0));
  const SpMatD g = discrete_gradient(*mesh);
  const SparseForm m = assemble_mass(*mesh, identity_field(*mesh).eps);

  VecXc x = random_vec(op.size(), 9);
  op.deflate(x);
  const VecXc e = x.segment(0, op.n_e);
  const VecXc h = x.segment(op.n_e, op.n_h);
  CHECK((g.cast<Complex>().adjoint() * (m.mat * e)).norm() < 1e-10 * x.norm());
  CHECK((g.cast<Complex>().adjoint() * (m.mat * h)).norm() < 1e-10 * x.norm());
}

TEST_CASE("inadmissible material fields are rejected")
{
  const auto mesh = make_mesh(2);
  MaterialField bad = identity_field(*mesh);
  bad.eps[0] = MaterialTensor::isotropic(3.0);  // outside (1, 1) bounds
  CHECK_THROWS_AS(assemble_maxwell(mesh, bad, ImpedanceSpec::scalar_constant(1.0)),
                  ValidationError);
}
