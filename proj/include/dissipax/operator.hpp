// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_OPERATOR_HPP
#define DISSIPAX_OPERATOR_HPP

#include <memory>
#include <string>
#include <vector>

#include "dissipax/fem.hpp"
#include "dissipax/hodge.hpp"

namespace dissipax
{

/// Discretized first-order Maxwell pencil A x = omega B x in the (E, H)
/// block layout
///   A = [[0, iK], [-iK^T, -i B_Z]],   B = diag(M_eps, M_mu),
/// which is the weak form of
///   i (curl H, E*) = omega (eps E, E*)
///   -i (E, curl H*) - i (Z H_tan, H*_tan) = omega (mu H, H*).
/// For accretive Z, Im(x^H A x) = -Re(h^H B_Z h) <= 0 for every x; with the
/// selfadjoint +-ic impedance, A is Hermitian. In the pec reference mode the
/// boundary E DOFs are eliminated (n x E = 0) and B_Z is dropped.
struct OperatorPair
{
  SparseForm a;  // general complex
  SparseForm b;  // hermitian_pd block-diagonal mass

  std::shared_ptr<const BoxMesh> mesh;
  MaterialField field;
  ImpedanceSpec impedance;

  int n_e = 0;  ///< E-block size (reduced under pec)
  int n_h = 0;  ///< H-block size
  /// Edge ids kept in the E block (all edges unless pec).
  std::vector<int> kept_e;
  /// Map edge id -> position in the E block, -1 if eliminated.
  std::vector<int> e_pos;

  std::string provenance;

  int size() const { return n_e + n_h; }

  Eigen::VectorBlock<const VecXc> e_block(const VecXc &x) const
  {
    return x.segment(0, n_e);
  }
  Eigen::VectorBlock<const VecXc> h_block(const VecXc &x) const
  {
    return x.segment(n_e, n_h);
  }

  /// Expands a reduced E block into full edge coefficients (zeros on
  /// eliminated boundary edges).
  VecXc expand_e(const VecXc &e_reduced) const;

  /// Kernel-deflation projectors (E block against eps, H block against mu).
  std::shared_ptr<const HodgeProjector> proj_e;
  std::shared_ptr<const HodgeProjector> proj_h;

  /// Removes the discrete-gradient kernel components of both blocks.
  void deflate(VecXc &x) const;

  /// Diagnostic matrices in block coordinates: boundary trace masses and
  /// unweighted H(curl) Gram matrices.
  SpMatD mb_e, mb_h;
  SpMatD hcurl_e, hcurl_h;
};

OperatorPair assemble_maxwell(const std::shared_ptr<const BoxMesh> &mesh,
                              const MaterialField &field, const ImpedanceSpec &z);

/// (x^H A x) / (x^H B x); for accretive Z the imaginary part is <= 0 up to
/// roundoff.
Complex rayleigh_quotient(const OperatorPair &op, const VecXc &x);

}  // namespace dissipax

#endif  // DISSIPAX_OPERATOR_HPP
