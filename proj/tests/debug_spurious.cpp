#include <cstdio>
#include <algorithm>
#include <vector>

#include <Eigen/Dense>

#include "dissipax/arnoldi.hpp"
#include "dissipax/fem.hpp"

using namespace dissipax;

int main()
{
  const double pi = 3.14159265358979323846;
  const int n = 4;
  auto mesh = std::make_shared<BoxMesh>(n, n, n, pi, pi, pi);
  auto field = MaterialField::uniform(static_cast<std::size_t>(mesh->n_cells()),
                                      MaterialTensor::identity(),
                                      MaterialTensor::identity(), 1.0, 1.0);

  // first-order pencil, dense
  const OperatorPair op = assemble_maxwell(mesh, field, ImpedanceSpec::pec());
  std::printf("pencil size %d\n", op.size());
  auto dense = dense_eigenvalues(op, Complex(1.3, 0.0));
  std::printf("pencil eigenvalues nearest 1.3:\n");
  for (int i = 0; i < 14; ++i)
    std::printf("  %.6f %+.2ei\n", dense[i].real(), dense[i].imag());

  // classical curl-curl on the same PEC-reduced edge space:
  // omega^2 M e = S e
  const SparseForm m_full = assemble_mass(*mesh, field.eps);
  const SparseForm s_full = assemble_curlcurl(*mesh, field.mu);
  const int ne = op.n_e;
  Eigen::MatrixXd m(ne, ne), s(ne, ne);
  m.setZero();
  s.setZero();
  for (int k = 0; k < m_full.mat.outerSize(); ++k)
    for (SpMatC::InnerIterator it(m_full.mat, k); it; ++it)
    {
      const int r = op.e_pos[it.row()], c = op.e_pos[it.col()];
      if (r >= 0 && c >= 0)
        m(r, c) = it.value().real();
    }
  for (int k = 0; k < s_full.mat.outerSize(); ++k)
    for (SpMatC::InnerIterator it(s_full.mat, k); it; ++it)
    {
      const int r = op.e_pos[it.row()], c = op.e_pos[it.col()];
      if (r >= 0 && c >= 0)
        s(r, c) = it.value().real();
    }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(s, m);
  std::vector<double> omegas;
  for (int i = 0; i < ges.eigenvalues().size(); ++i)
  {
    const double w2 = ges.eigenvalues()(i);
    if (w2 > 1e-8)
      omegas.push_back(std::sqrt(w2));
  }
  std::sort(omegas.begin(), omegas.end());
  std::printf("curl-curl positive eigenvalues (lowest 10):\n");
  for (int i = 0; i < 10 && i < (int)omegas.size(); ++i)
    std::printf("  %.6f\n", omegas[i]);
  return 0;
}
