// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_RESOLVENT_HPP
#define DISSIPAX_RESOLVENT_HPP

#include "dissipax/operator.hpp"

namespace dissipax
{

struct ResolventResult
{
  VecXc x;              ///< (E, H) block solution
  double residual = 0;  ///< ||(omega B - A) x - B f|| / ||B f||
};

/// Resolvent application x = (omega - M)^{-1} f for Im omega > 0 through the
/// coercive H-field form
///   b(H, w) = -i omega (mu H, w) + (i/omega) (eps^{-1} curl H, curl w)
///             + (Z H_tan, w_tan)
/// with right-hand side -(1/omega)(f^1, curl w) - i (mu f^2, w), followed by
/// the recovery E = omega^{-1} (f^1 + i eps^{-1} curl H) by mass projection.
/// Discretely the curl-curl term is the Schur complement K^T M_eps^{-1} K of
/// the block pencil, so the recovered pair satisfies
/// (omega B - A) x = B f to solver precision.
///
/// Preconditions: Im omega > 0 (rejected otherwise), |omega| bounded away
/// from zero, and a non-pec impedance. Intended for verification at small
/// mesh sizes; the Schur complement is formed densely on the H block.
ResolventResult resolvent_solve(const OperatorPair &op, Complex omega,
                                const VecXc &f);

}  // namespace dissipax

#endif  // DISSIPAX_RESOLVENT_HPP
