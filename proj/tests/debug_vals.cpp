#include <cstdio>

#include "dissipax/arnoldi.hpp"
#include "dissipax/scan.hpp"

using namespace dissipax;

int main()
{
  const double pi = 3.14159265358979323846;
  for (int n : {4, 8})
  {
    auto mesh = std::make_shared<BoxMesh>(n, n, n, pi, pi, pi);
    auto field = MaterialField::uniform(
        static_cast<std::size_t>(mesh->n_cells()), MaterialTensor::identity(),
        MaterialTensor::identity(), 1.0, 1.0);
    const OperatorPair op = assemble_maxwell(mesh, field, ImpedanceSpec::pec());
    const SpectrumReport rep = solve_eigenpairs(op, Complex(1.3, 0.0), 8);
    std::printf("PEC %d^3:", n);
    for (const auto &p : rep.eigenpairs)
      std::printf(" %.6f", p.omega.real());
    std::printf("\n");
  }

  // selfadjoint pairing under refinement
  for (int n : {2, 3, 4})
  {
    auto mesh = std::make_shared<BoxMesh>(n, n, n, pi, pi, pi);
    auto field = MaterialField::uniform(
        static_cast<std::size_t>(mesh->n_cells()), MaterialTensor::identity(),
        MaterialTensor::identity(), 1.0, 1.0);
    const OperatorPair op =
        assemble_maxwell(mesh, field, ImpedanceSpec::selfadjoint_ic(1.0, -1));
    if (op.size() <= 2500)
    {
      auto dense = dense_eigenvalues(op, Complex(0, 0));
      double minp = 1e300, maxn = -1e300;
      for (Complex w : dense)
      {
        if (w.real() > 1e-6) minp = std::min(minp, w.real());
        if (w.real() < -1e-6) maxn = std::max(maxn, w.real());
      }
      std::printf("selfadj %d^3: min_pos=%.6f max_neg=%.6f ratio=%.4f\n", n, minp,
                  maxn, minp / -maxn);
    }
    else
    {
      const SpectrumReport rp = solve_eigenpairs(op, Complex(0.3, 0.0), 8);
      const SpectrumReport rn = solve_eigenpairs(op, Complex(-0.3, 0.0), 8);
      double minp = 1e300, maxn = -1e300;
      for (const auto &p : rp.eigenpairs)
        if (p.converged && p.omega.real() > 1e-6)
          minp = std::min(minp, p.omega.real());
      for (const auto &p : rn.eigenpairs)
        if (p.converged && p.omega.real() < -1e-6)
          maxn = std::max(maxn, p.omega.real());
      std::printf("selfadj %d^3: min_pos=%.6f max_neg=%.6f ratio=%.4f\n", n, minp,
                  maxn, minp / -maxn);
    }
  }
  return 0;
}
