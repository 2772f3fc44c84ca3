// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_KERNELS_HPP
#define DISSIPAX_KERNELS_HPP

#include <cstddef>

#include "dissipax/common.hpp"

namespace dissipax::kernels
{

// Complex double-precision vector kernels used in the Krylov and quadratic-form
// inner loops. Each kernel has a scalar reference implementation and, on x86
// hardware with AVX2, a vectorized variant selected once at startup. The two
// variants are equivalence-tested against each other; selection can be forced
// with the environment variable DISSIPAX_SIMD in {scalar, avx2}.

enum class Isa
{
  scalar,
  avx2
};

/// Instruction set chosen by the runtime dispatcher.
Isa active_isa();

const char *isa_name(Isa isa);

namespace scalar
{
/// sum_i conj(x[i]) * y[i]
Complex cdotc(std::size_t n, const Complex *x, const Complex *y);
/// y += a * x
void caxpy(std::size_t n, Complex a, const Complex *x, Complex *y);
/// x *= a
void cscal(std::size_t n, Complex a, Complex *x);
/// sum_i |x[i]|^2
double cnrm2sq(std::size_t n, const Complex *x);
}  // namespace scalar

#if defined(DISSIPAX_BUILD_AVX2)
namespace avx2
{
Complex cdotc(std::size_t n, const Complex *x, const Complex *y);
void caxpy(std::size_t n, Complex a, const Complex *x, Complex *y);
void cscal(std::size_t n, Complex a, Complex *x);
double cnrm2sq(std::size_t n, const Complex *x);
bool supported_at_runtime();
}  // namespace avx2
#endif

Complex cdotc(std::size_t n, const Complex *x, const Complex *y);
void caxpy(std::size_t n, Complex a, const Complex *x, Complex *y);
void cscal(std::size_t n, Complex a, Complex *x);
double cnrm2sq(std::size_t n, const Complex *x);

inline Complex cdotc(const VecXc &x, const VecXc &y)
{
  DX_VERIFY(x.size() == y.size(), "cdotc: size mismatch");
  return cdotc(static_cast<std::size_t>(x.size()), x.data(), y.data());
}

inline void caxpy(Complex a, const VecXc &x, VecXc &y)
{
  DX_VERIFY(x.size() == y.size(), "caxpy: size mismatch");
  caxpy(static_cast<std::size_t>(x.size()), a, x.data(), y.data());
}

inline void cscal(Complex a, VecXc &x)
{
  cscal(static_cast<std::size_t>(x.size()), a, x.data());
}

inline double cnrm2sq(const VecXc &x)
{
  return cnrm2sq(static_cast<std::size_t>(x.size()), x.data());
}

}  // namespace dissipax::kernels

#endif  // DISSIPAX_KERNELS_HPP
