// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/impedance.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace dissipax
{

namespace
{
constexpr double kPi = 3.14159265358979323846;

// One sector branch must hold uniformly: arg a in [-pi/2, pi/2 - delta] or
// arg a in [-pi/2 + delta, pi/2].
bool sector_ok(const Complex *vals, int n, double delta)
{
  bool upper_cut = true;  // arg in [-pi/2, pi/2 - delta]
  bool lower_cut = true;  // arg in [-pi/2 + delta, pi/2]
  for (int i = 0; i < n; ++i)
  {
    const double arg = std::arg(vals[i]);
    if (!(arg >= -kPi / 2 - 1e-15 && arg <= kPi / 2 - delta + 1e-15))
      upper_cut = false;
    if (!(arg >= -kPi / 2 + delta - 1e-15 && arg <= kPi / 2 + 1e-15))
      lower_cut = false;
  }
  return upper_cut || lower_cut;
}
}  // namespace

ImpedanceSpec ImpedanceSpec::scalar_constant(Complex a, double delta)
{
  ImpedanceSpec z;
  z.kind = Kind::scalar_constant;
  z.a = a;
  z.delta = delta;
  z.validate();
  return z;
}

ImpedanceSpec ImpedanceSpec::per_face_scalar(const std::array<Complex, 6> &a,
                                             double delta)
{
  ImpedanceSpec z;
  z.kind = Kind::per_face_scalar;
  z.face_a = a;
  z.delta = delta;
  z.validate();
  return z;
}

ImpedanceSpec ImpedanceSpec::selfadjoint_ic(double c, int sign)
{
  ImpedanceSpec z;
  z.kind = Kind::selfadjoint_ic;
  z.ic_c = c;
  z.ic_sign = sign;
  z.validate();
  return z;
}

ImpedanceSpec ImpedanceSpec::matrix(Eigen::MatrixXcd zmat)
{
  ImpedanceSpec z;
  z.kind = Kind::matrix;
  z.zmat = std::move(zmat);
  z.validate();
  return z;
}

ImpedanceSpec ImpedanceSpec::pec()
{
  ImpedanceSpec z;
  z.kind = Kind::pec;
  return z;
}

Complex ImpedanceSpec::coefficient_on(int side) const
{
  switch (kind)
  {
    case Kind::scalar_constant:
      return a;
    case Kind::per_face_scalar:
      return face_a[static_cast<std::size_t>(side)];
    case Kind::selfadjoint_ic:
      return Complex(0.0, ic_sign * ic_c);
    default:
      DX_VERIFY(false, "impedance variant has no scalar coefficient");
      return {};
  }
}

bool ImpedanceSpec::accretive() const { return kind != Kind::pec; }

bool ImpedanceSpec::has_coercive_real_part() const
{
  switch (kind)
  {
    case Kind::scalar_constant:
      return a.real() > 0.0;
    case Kind::per_face_scalar:
    {
      for (const auto &v : face_a)
        if (!(v.real() > 0.0))
          return false;
      return true;
    }
    case Kind::selfadjoint_ic:
      return false;
    case Kind::matrix:
    {
      const Eigen::MatrixXcd re = 0.5 * (zmat + zmat.adjoint());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(re, Eigen::EigenvaluesOnly);
      return es.eigenvalues().minCoeff() > 0.0;
    }
    case Kind::pec:
      return false;
  }
  return false;
}

void ImpedanceSpec::validate() const
{
  switch (kind)
  {
    case Kind::scalar_constant:
      DX_VERIFY(std::abs(a) > 0.0, "impedance coefficient must be nonzero");
      DX_VERIFY(delta > 0.0, "sector margin delta must be positive");
      DX_VERIFY(sector_ok(&a, 1, delta),
                "impedance coefficient violates the sector condition");
      break;
    case Kind::per_face_scalar:
    {
      for (const auto &v : face_a)
        DX_VERIFY(std::abs(v) > 0.0, "per-face coefficients must be nonzero");
      DX_VERIFY(delta > 0.0, "sector margin delta must be positive");
      DX_VERIFY(sector_ok(face_a.data(), 6, delta),
                "per-face coefficients violate a common sector branch");
      break;
    }
    case Kind::selfadjoint_ic:
      DX_VERIFY(ic_c > 0.0, "selfadjoint_ic requires c > 0");
      DX_VERIFY(ic_sign == 1 || ic_sign == -1, "selfadjoint_ic sign must be +-1");
      break;
    case Kind::matrix:
      DX_VERIFY(zmat.rows() == zmat.cols() && zmat.rows() > 0,
                "matrix impedance must be square and nonempty");
      DX_VERIFY(zmat.allFinite(), "matrix impedance entries must be finite");
      break;
    case Kind::pec:
      break;
  }
}

std::string ImpedanceSpec::describe() const
{
  std::ostringstream os;
  switch (kind)
  {
    case Kind::scalar_constant:
      os << "scalar_constant(" << a.real() << (a.imag() >= 0 ? "+" : "")
         << a.imag() << "i)";
      break;
    case Kind::per_face_scalar:
      os << "per_face_scalar";
      break;
    case Kind::selfadjoint_ic:
      os << "selfadjoint_ic(" << ic_c << ", " << (ic_sign > 0 ? "+" : "-") << ")";
      break;
    case Kind::matrix:
      os << "matrix(" << zmat.rows() << "x" << zmat.cols() << ")";
      break;
    case Kind::pec:
      os << "pec";
      break;
  }
  return os.str();
}

}  // namespace dissipax
