// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_IMPEDANCE_HPP
#define DISSIPAX_IMPEDANCE_HPP

#include <array>
#include <optional>
#include <string>

#include "dissipax/common.hpp"

namespace dissipax
{

/// Boundary impedance operator Z in n x E = Z H_tan.
///
/// Scalar variants act as pointwise multiplication on tangential traces and
/// must satisfy |a| >= c > 0 together with the sector condition
///   arg a in [-pi/2, pi/2 - delta]  or  arg a in [-pi/2 + delta, pi/2]
/// for the stored delta > 0 (one branch uniformly over the boundary). The
/// matrix variant is a complex matrix acting on boundary-edge trace
/// coefficients; its accretivity/coercivity is sampled at assembly time.
/// pec is a reference mode (n x E = 0) outside the accretive-coercive class.
struct ImpedanceSpec
{
  enum class Kind
  {
    scalar_constant,
    per_face_scalar,
    selfadjoint_ic,
    matrix,
    pec
  };

  Kind kind = Kind::scalar_constant;
  Complex a{1.0, 0.0};                 ///< scalar_constant coefficient
  std::array<Complex, 6> face_a{};     ///< per_face_scalar, indexed by BoxSide
  double ic_c = 1.0;                   ///< selfadjoint_ic magnitude (> 0)
  int ic_sign = -1;                    ///< selfadjoint_ic: Z = ic_sign * i * c
  Eigen::MatrixXcd zmat;               ///< matrix variant on boundary-edge DOFs
  double delta = 1e-3;                 ///< sector margin for scalar variants

  static ImpedanceSpec scalar_constant(Complex a, double delta = 1e-3);
  static ImpedanceSpec per_face_scalar(const std::array<Complex, 6> &a,
                                       double delta = 1e-3);
  static ImpedanceSpec selfadjoint_ic(double c, int sign);
  static ImpedanceSpec matrix(Eigen::MatrixXcd zmat);
  static ImpedanceSpec pec();

  bool is_pec() const { return kind == Kind::pec; }

  /// Effective scalar multiplier for a given box side (scalar variants only).
  Complex coefficient_on(int side) const;

  /// Z is accretive with Re(Zv, v) >= 0; true for all non-pec variants by
  /// construction of the validation below.
  bool accretive() const;

  /// Re Z coercive-positive (hypothesis of the real-eigenvalue diagnostic):
  /// scalar variants with Re a >= c > 0 everywhere. selfadjoint_ic has
  /// Re Z = 0 and fails this.
  bool has_coercive_real_part() const;

  /// Throws ValidationError if the variant violates its stated invariants
  /// (mesh-independent part; the matrix variant is validated at assembly).
  void validate() const;

  std::string describe() const;
};

}  // namespace dissipax

#endif  // DISSIPAX_IMPEDANCE_HPP
