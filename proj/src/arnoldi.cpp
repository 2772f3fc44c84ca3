// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/arnoldi.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>

#include "dissipax/diagnostics.hpp"
#include "dissipax/kernels.hpp"

namespace dissipax
{

namespace
{

VecXc random_start(int n, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  VecXc v(n);
  for (int i = 0; i < n; ++i)
    v(i) = Complex(dist(rng), dist(rng));
  return v;
}

struct ArnoldiState
{
  Eigen::MatrixXcd v;   // n x (m+1) basis, B-orthonormal
  Eigen::MatrixXcd bv;  // B * basis columns
  Eigen::MatrixXcd h;   // (m+1) x m Hessenberg
  int m = 0;            // columns built
  bool invariant = false;
};

// Extends the Arnoldi factorization of S = (A - sigma B)^{-1} B to m_target
// columns, deflating each candidate vector through the Hodge projectors.
void extend_arnoldi(const OperatorPair &op,
                    const Eigen::SparseLU<SpMatC> &lu, ArnoldiState &st,
                    int m_target)
{
  const int n = op.size();
  const std::size_t un = static_cast<std::size_t>(n);
  if (st.v.cols() < m_target + 1)
  {
    st.v.conservativeResize(n, m_target + 1);
    st.bv.conservativeResize(n, m_target + 1);
  }
  Eigen::MatrixXcd h_old = st.h;
  st.h = Eigen::MatrixXcd::Zero(m_target + 1, m_target);
  if (h_old.size() > 0)
    st.h.topLeftCorner(h_old.rows(), h_old.cols()) = h_old;

  for (int j = st.m; j < m_target; ++j)
  {
    VecXc w = lu.solve(st.bv.col(j));
    op.deflate(w);
    VecXc bw = op.b.mat * w;
    // modified Gram-Schmidt in the B-inner product, one refinement pass;
    // bw is downdated alongside w within the step but refreshed by an exact
    // matvec afterwards, since downdate roundoff would otherwise compound
    // across basis generations
    for (int pass = 0; pass < 2; ++pass)
    {
      for (int i = 0; i <= j; ++i)
      {
        const Complex hij =
            kernels::cdotc(un, st.v.col(i).data(), bw.data());
        if (pass == 0)
          st.h(i, j) = hij;
        else
          st.h(i, j) += hij;
        kernels::caxpy(un, -hij, st.v.col(i).data(), w.data());
        kernels::caxpy(un, -hij, st.bv.col(i).data(), bw.data());
      }
    }
    bw = op.b.mat * w;
    const double nrm =
        std::sqrt(std::abs(kernels::cdotc(un, w.data(), bw.data()).real()));
    st.h(j + 1, j) = nrm;
    if (!(nrm > 1e-13))
    {
      st.m = j + 1;
      st.invariant = true;
      return;
    }
    const Complex inv(1.0 / nrm, 0.0);
    kernels::cscal(un, inv, w.data());
    kernels::cscal(un, inv, bw.data());
    st.v.col(j + 1) = w;
    st.bv.col(j + 1) = bw;
    st.m = j + 1;
  }
}

void normalize_pair(const OperatorPair &op, EigenPair &p)
{
  const std::size_t n = static_cast<std::size_t>(p.coeffs.size());
  VecXc bx = op.b.mat * p.coeffs;
  const double energy = kernels::cdotc(n, p.coeffs.data(), bx.data()).real();
  DX_VERIFY(energy > 0.0, "eigenpair has nonpositive energy");
  kernels::cscal(n, Complex(1.0 / std::sqrt(energy), 0.0), p.coeffs.data());
  // deterministic phase: largest-magnitude coefficient real positive
  int imax = 0;
  double amax = -1.0;
  for (int i = 0; i < p.coeffs.size(); ++i)
  {
    const double a = std::abs(p.coeffs(i));
    if (a > amax)
    {
      amax = a;
      imax = i;
    }
  }
  if (amax > 0.0)
  {
    const Complex phase = std::conj(p.coeffs(imax)) / amax;
    kernels::cscal(n, phase, p.coeffs.data());
  }
  bx = op.b.mat * p.coeffs;
  p.energy = kernels::cdotc(n, p.coeffs.data(), bx.data()).real();
}

}  // namespace

SpectrumReport solve_eigenpairs(const OperatorPair &op, Complex shift, int k,
                                const EigensolverOptions &opts)
{
  DX_VERIFY(k >= 1, "at least one eigenpair must be requested");
  const int n = op.size();
  DX_VERIFY(k < n, "requested count exceeds the problem size");

  SpectrumReport rep;
  rep.shift = shift;
  rep.requested = k;
  rep.deflated_kernel_dim =
      op.proj_e->n_interior_vertices() + op.proj_h->n_interior_vertices();

  // Factor (A - sigma B); nudge the shift upward in Im on failure.
  Eigen::SparseLU<SpMatC> lu;
  Complex sigma = shift;
  bool factored = false;
  for (int attempt = 0; attempt <= opts.factorization_retries; ++attempt)
  {
    SpMatC shifted = op.a.mat - sigma * op.b.mat;
    shifted.makeCompressed();
    lu.compute(shifted);
    if (lu.info() == Eigen::Success)
    {
      factored = true;
      break;
    }
    sigma += Complex(0.0, 1e-3);
  }
  if (!factored)
  {
    throw SolverError("shift-invert factorization failed after retries");
  }
  rep.shift = sigma;

  ArnoldiState st;
  st.v.resize(n, 1);
  st.bv.resize(n, 1);
  {
    VecXc v0 = random_start(n, opts.start_seed);
    op.deflate(v0);
    VecXc bv0 = op.b.mat * v0;
    const double nrm = std::sqrt(
        std::abs(kernels::cdotc(static_cast<std::size_t>(n), v0.data(),
                                bv0.data())
                     .real()));
    DX_VERIFY(nrm > 0.0, "start vector vanished under deflation");
    v0 /= nrm;
    bv0 /= nrm;
    st.v.col(0) = v0;
    st.bv.col(0) = bv0;
  }

  int m = opts.min_krylov > 0 ? opts.min_krylov
                              : std::min(n - 1, std::max(2 * k + 16, 40));
  const int m_max = std::min(n - 1, opts.max_krylov);

  std::vector<EigenPair> found;
  while (true)
  {
    extend_arnoldi(op, lu, st, m);
    rep.iterations = st.m;
    rep.krylov_dim = st.m;

    const int mm = st.m;
    Eigen::MatrixXcd hsq = st.h.topLeftCorner(mm, mm);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(hsq);
    DX_VERIFY(es.info() == Eigen::Success, "Hessenberg eigensolve failed");

    // Ritz candidates ordered by |omega - sigma| = 1/|nu|, largest |nu| first.
    std::vector<int> order(mm);
    for (int i = 0; i < mm; ++i)
      order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::abs(es.eigenvalues()(a)) > std::abs(es.eigenvalues()(b));
    });

    found.clear();
    int converged_count = 0;
    for (int idx : order)
    {
      if (static_cast<int>(found.size()) >= k)
        break;
      const Complex nu = es.eigenvalues()(idx);
      if (std::abs(nu) < 1e-12)
        continue;  // far from the shift, not a usable Ritz value
      EigenPair p;
      p.omega = sigma + 1.0 / nu;
      p.coeffs = st.v.leftCols(mm) * es.eigenvectors().col(idx);
      const VecXc ax = op.a.mat * p.coeffs;
      const VecXc bx = op.b.mat * p.coeffs;
      const double bn = std::sqrt(kernels::cnrm2sq(bx));
      if (!(bn > 0.0))
        continue;
      p.residual = std::sqrt((ax - p.omega * bx).squaredNorm()) / bn;
      p.converged = p.residual < opts.tol;
      if (p.converged)
        ++converged_count;
      found.push_back(std::move(p));
    }

    if (converged_count >= k || st.invariant || mm >= m_max)
    {
      rep.converged = converged_count >= std::min<int>(k, found.size());
      if (!rep.converged)
        rep.message = "iteration cap reached; partial results returned";
      break;
    }
    m = std::min(m_max, std::max(m + 24, (3 * m) / 2));
  }

  for (auto &p : found)
    normalize_pair(op, p);

  std::sort(found.begin(), found.end(), [&](const EigenPair &a, const EigenPair &b) {
    return std::abs(a.omega - sigma) < std::abs(b.omega - sigma);
  });
  if (static_cast<int>(found.size()) > k)
    found.resize(k);

  // Cluster annotation: eigenvalues closer than the relative tolerance share
  // a multiplicity id.
  int next_cluster = 0;
  for (std::size_t i = 0; i < found.size(); ++i)
  {
    for (std::size_t j = 0; j < i; ++j)
    {
      const double scale =
          std::max({1.0, std::abs(found[i].omega), std::abs(found[j].omega)});
      if (std::abs(found[i].omega - found[j].omega) <
          opts.cluster_rel_tol * scale)
      {
        if (found[j].cluster < 0)
          found[j].cluster = next_cluster++;
        found[i].cluster = found[j].cluster;
      }
    }
  }

  for (auto &p : found)
  {
    const BoundaryDiagnostics d = boundary_diagnostics(p, op);
    p.trace_ratio = d.trace_ratio;
    p.pec_defect = d.pec_defect;
  }

  rep.eigenpairs = std::move(found);
  return rep;
}

std::vector<Complex> dense_eigenvalues(const OperatorPair &op, Complex shift)
{
  const int n = op.size();
  DX_VERIFY(n <= 2500, "dense oracle limited to small problems");
  Eigen::MatrixXcd a = Eigen::MatrixXcd(op.a.mat);
  Eigen::MatrixXcd b = Eigen::MatrixXcd(op.b.mat);
  const Eigen::LLT<Eigen::MatrixXcd> llt(b);
  DX_VERIFY(llt.info() == Eigen::Success, "B must be Hermitian positive definite");
  const Eigen::MatrixXcd l = llt.matrixL();
  // reduce A x = w B x to (L^-1 A L^-H) y = w y
  Eigen::MatrixXcd t = l.triangularView<Eigen::Lower>().solve(a);
  t = l.conjugate().triangularView<Eigen::Lower>().solve(t.transpose()).transpose();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(t, false);
  DX_VERIFY(es.info() == Eigen::Success, "dense eigensolve failed");
  std::vector<Complex> vals(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(vals.begin(), vals.end(), [&](Complex x, Complex y) {
    return std::abs(x - shift) < std::abs(y - shift);
  });
  return vals;
}

}  // namespace dissipax
