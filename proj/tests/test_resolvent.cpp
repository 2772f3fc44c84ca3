// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <doctest.h>

#include <Eigen/Dense>

#include "dissipax/resolvent.hpp"
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

OperatorPair small_operator(std::uint64_t seed)
{
  auto mesh = std::make_shared<BoxMesh>(2, 2, 2, 1.0, 1.0, 1.0);
  RandomFieldSampler sampler;
  sampler.alpha = 1.0;
  sampler.beta = 4.0;
  sampler.seed = seed;
  const MaterialField field = sampler.sample(*mesh, 0);
  return assemble_maxwell(mesh, field, ImpedanceSpec::scalar_constant(1.0));
}

}  // namespace

TEST_CASE("resolvent at omega = i has small residual")
{
  const OperatorPair op = small_operator(1);
  const VecXc f = random_vec(op.size(), 2);
  const ResolventResult res = resolvent_solve(op, Complex(0.0, 1.0), f);
  CHECK(res.residual < 1e-9);
}

TEST_CASE("resolvent agrees with a dense factorization of the block system")
{
  const OperatorPair op = small_operator(3);
  const VecXc f = random_vec(op.size(), 4);
  const Complex omega(0.8, 0.9);

  const ResolventResult res = resolvent_solve(op, omega, f);

  // oracle: dense LU of (omega B - A) applied to B f
  const Eigen::MatrixXcd sys =
      omega * Eigen::MatrixXcd(op.b.mat) - Eigen::MatrixXcd(op.a.mat);
  const VecXc oracle = Eigen::PartialPivLU<Eigen::MatrixXcd>(sys).solve(
      VecXc(op.b.mat * f));
  CHECK((res.x - oracle).norm() < 1e-8 * std::max(1.0, oracle.norm()));
}

TEST_CASE("zero data yields the zero solution")
{
  const OperatorPair op = small_operator(5);
  const ResolventResult res =
      resolvent_solve(op, Complex(0.0, 1.0), VecXc::Zero(op.size()));
  CHECK(res.x.norm() == 0.0);
}

TEST_CASE("m-dissipative contraction bound in the energy norm")
{
  // ||(omega - M)^{-1} f||_B <= ||f||_B / Im omega
  const OperatorPair op = small_operator(7);
  for (const Complex omega : {Complex(0.0, 0.7), Complex(1.1, 1.3), Complex(-0.4, 2.0)})
  {
    const VecXc f = random_vec(op.size(), 11);
    const ResolventResult res = resolvent_solve(op, omega, f);
    const double xb = std::sqrt(res.x.dot(op.b.mat * res.x).real());
    const double fb = std::sqrt(f.dot(op.b.mat * f).real());
    CHECK(xb <= fb / omega.imag() * (1.0 + 1e-9));
  }
}

TEST_CASE("invalid spectral parameters are rejected")
{
  const OperatorPair op = small_operator(9);
  const VecXc f = random_vec(op.size(), 12);
  CHECK_THROWS_AS(resolvent_solve(op, Complex(1.0, 0.0), f), ValidationError);
  CHECK_THROWS_AS(resolvent_solve(op, Complex(1.0, -0.5), f), ValidationError);
  CHECK_THROWS_AS(resolvent_solve(op, Complex(0.0, 1e-12), f), ValidationError);
}
