// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <doctest.h>

#include "dissipax/hodge.hpp"
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

std::vector<MaterialTensor> random_field(const BoxMesh &mesh, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::vector<MaterialTensor> xi(static_cast<std::size_t>(mesh.n_cells()));
  for (auto &t : xi)
    t = RandomFieldSampler::random_tensor(rng, 1.0, 6.0);
  return xi;
}

}  // namespace

TEST_CASE("pure gradient input has vanishing divergence-free part")
{
  BoxMesh mesh(3, 3, 3, 1.0, 1.0, 1.0);
  const auto xi = random_field(mesh, 1);
  const SpMatD g = discrete_gradient(mesh);
  REQUIRE(g.cols() == 8);

  VecXc p = random_vec(static_cast<int>(g.cols()), 2);
  const VecXc u = g.cast<Complex>() * p;
  const HodgeSplit s = hodge_project(mesh, xi, u);
  CHECK(s.divfree_part.norm() < 1e-10 * u.norm());
  CHECK((s.gradient_part - u).norm() < 1e-10 * u.norm());
}

TEST_CASE("constant fields are divergence-free for xi = I")
{
  BoxMesh mesh(3, 3, 3, 1.0, 1.0, 1.0);
  const std::vector<MaterialTensor> id(
      static_cast<std::size_t>(mesh.n_cells()), MaterialTensor::identity());
  // edge coefficients of the constant field e_x: line integral = hx on x-edges
  VecXc u = VecXc::Zero(mesh.n_edges());
  for (int e = 0; e < mesh.n_edges(); ++e)
    if (mesh.edge_axis(e) == 0)
      u(e) = Complex(mesh.hx(), 0.0);
  // G^H M u = 0 analytically on the uniform mesh: gradient part vanishes
  const HodgeSplit s = hodge_project(mesh, id, u);
  CHECK(s.gradient_part.norm() < 1e-12 * u.norm());
}

TEST_CASE("hodge split reconstructs and is M_xi-orthogonal")
{
  BoxMesh mesh(3, 2, 4, 1.2, 0.9, 2.0);
  const auto xi = random_field(mesh, 5);
  const SparseForm m = assemble_mass(mesh, xi);

  for (int t = 0; t < 5; ++t)
  {
    const VecXc u = random_vec(mesh.n_edges(), 100 + t);
    const HodgeSplit s = hodge_project(mesh, xi, u);
    CHECK((s.gradient_part + s.divfree_part - u).norm() < 1e-12 * u.norm());
    const Complex ip = s.gradient_part.dot(m.mat * s.divfree_part);
    CHECK(std::abs(ip) < 1e-10 * u.norm() * u.norm());
    // remainder is xi-divergence-free: G^H M_xi r = 0
    const SpMatD g = discrete_gradient(mesh);
    const VecXc div = g.cast<Complex>().adjoint() * (m.mat * s.divfree_part);
    CHECK(div.norm() < 1e-10 * u.norm());
  }
}

TEST_CASE("projector is idempotent")
{
  BoxMesh mesh(3, 3, 3, 1.0, 1.0, 1.0);
  const auto xi = random_field(mesh, 9);
  HodgeProjector proj(mesh, xi);
  const VecXc u = random_vec(mesh.n_edges(), 11);
  const VecXc once = proj.project(u);
  const VecXc twice = proj.project(once);
  CHECK((twice - once).norm() < 1e-11 * once.norm());
}

TEST_CASE("single-cell mesh has no interior vertices and trivial projection")
{
  BoxMesh mesh(1, 1, 1, 1.0, 1.0, 1.0);
  const std::vector<MaterialTensor> id(1, MaterialTensor::identity());
  const VecXc u = random_vec(12, 3);
  const HodgeSplit s = hodge_project(mesh, id, u);
  CHECK(s.gradient_part.norm() == 0.0);
  CHECK((s.divfree_part - u).norm() == 0.0);
}
