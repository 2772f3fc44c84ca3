// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/scan.hpp"

#include <cmath>
#include <limits>
#include <thread>

namespace dissipax
{

MaterialTensor RandomFieldSampler::random_tensor(std::mt19937_64 &rng, double alpha,
                                                 double beta)
{
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::Vector3d lam;
  for (int i = 0; i < 3; ++i)
    lam(i) = alpha + (beta - alpha) * unif(rng);
  // random rotation from a QR of a Gaussian matrix, det fixed to +1
  std::normal_distribution<double> gauss;
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
  Eigen::Matrix3d q = qr.householderQ();
  if (q.determinant() < 0.0)
    q.col(0) = -q.col(0);
  const Eigen::Matrix3d m = q * lam.asDiagonal() * q.transpose();
  return MaterialTensor::from_matrix(0.5 * (m + m.transpose()));
}

MaterialField RandomFieldSampler::sample(const BoxMesh &mesh,
                                         std::uint64_t trial) const
{
  // splitmix-style seed derivation keeps trials independent of each other
  std::uint64_t s = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  s ^= s >> 30;
  s *= 0xBF58476D1CE4E5B9ULL;
  s ^= s >> 27;
  std::mt19937_64 rng(s);

  const int nb = std::max(1, blocks);
  std::vector<MaterialTensor> eps_blocks(static_cast<std::size_t>(nb) * nb * nb);
  std::vector<MaterialTensor> mu_blocks(eps_blocks.size());
  for (auto &t : eps_blocks)
    t = random_tensor(rng, alpha, beta);
  for (auto &t : mu_blocks)
    t = random_tensor(rng, alpha, beta);

  MaterialField f;
  f.alpha = alpha;
  f.beta = beta;
  f.eps.resize(mesh.n_cells());
  f.mu.resize(mesh.n_cells());
  for (int c = 0; c < mesh.n_cells(); ++c)
  {
    const Eigen::Vector3d x = mesh.cell_center(c);
    const int bi = std::min(nb - 1, static_cast<int>(nb * x.x() / mesh.lx()));
    const int bj = std::min(nb - 1, static_cast<int>(nb * x.y() / mesh.ly()));
    const int bk = std::min(nb - 1, static_cast<int>(nb * x.z() / mesh.lz()));
    const std::size_t b = static_cast<std::size_t>(bi + nb * (bj + nb * bk));
    f.eps[c] = eps_blocks[b];
    f.mu[c] = mu_blocks[b];
  }
  return f;
}

GapScanResult spectral_gap_scan(const RandomFieldSampler &sampler, int trials,
                                const std::shared_ptr<const BoxMesh> &mesh,
                                const ImpedanceSpec &z,
                                const std::vector<Complex> &shift_grid, int k,
                                double zero_tol, int threads)
{
  DX_VERIFY(trials >= 1, "at least one trial required");
  DX_VERIFY(!shift_grid.empty(), "shift grid must be nonempty");

  GapScanResult result;
  result.records.resize(static_cast<std::size_t>(trials));

  auto run_trial = [&](int t) {
    GapScanRecord rec;
    rec.trial = static_cast<std::uint64_t>(t);
    try
    {
      const MaterialField field = sampler.sample(*mesh, rec.trial);
      const OperatorPair op = assemble_maxwell(mesh, field, z);
      double best = std::numeric_limits<double>::infinity();
      Complex best_omega{};
      for (const Complex &shift : shift_grid)
      {
        const SpectrumReport rep = solve_eigenpairs(op, shift, k);
        for (const auto &p : rep.eigenpairs)
        {
          if (!p.converged)
            continue;
          const double mag = std::abs(p.omega);
          if (mag <= zero_tol)
            continue;
          if (mag < best)
          {
            best = mag;
            best_omega = p.omega;
          }
        }
      }
      if (!std::isfinite(best))
      {
        rec.ok = false;
        rec.error = "no nonzero eigenvalue converged";
      }
      else
      {
        rec.min_abs_omega = best;
        rec.omega = best_omega;
      }
    }
    catch (const std::exception &ex)
    {
      rec.ok = false;
      rec.error = ex.what();
    }
    result.records[static_cast<std::size_t>(t)] = std::move(rec);
  };

  if (threads <= 1)
  {
    for (int t = 0; t < trials; ++t)
      run_trial(t);
  }
  else
  {
    std::vector<std::thread> pool;
    const int nw = std::min(threads, trials);
    for (int w = 0; w < nw; ++w)
      pool.emplace_back([&, w]() {
        for (int t = w; t < trials; t += nw)
          run_trial(t);
      });
    for (auto &th : pool)
      th.join();
  }

  result.r_min = std::numeric_limits<double>::infinity();
  for (const auto &rec : result.records)
  {
    if (!rec.ok)
    {
      ++result.failures;
      continue;
    }
    result.r_min = std::min(result.r_min, rec.min_abs_omega);
  }
  DX_VERIFY(result.failures < trials, "every scan trial failed");
  return result;
}

}  // namespace dissipax
