// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace dissipax::kernels
{

namespace scalar
{

Complex cdotc(std::size_t n, const Complex *x, const Complex *y)
{
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

void caxpy(std::size_t n, Complex a, const Complex *x, Complex *y)
{
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i)
  {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Complex(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void cscal(std::size_t n, Complex a, Complex *x)
{
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i)
  {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = Complex(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

double cnrm2sq(std::size_t n, const Complex *x)
{
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

}  // namespace scalar

namespace
{

Isa detect_isa()
{
  const char *force = std::getenv("DISSIPAX_SIMD");
  if (force != nullptr)
  {
    if (std::strcmp(force, "scalar") == 0)
    {
      return Isa::scalar;
    }
#if defined(DISSIPAX_BUILD_AVX2)
    if (std::strcmp(force, "avx2") == 0 && avx2::supported_at_runtime())
    {
      return Isa::avx2;
    }
#endif
    return Isa::scalar;
  }
#if defined(DISSIPAX_BUILD_AVX2)
  if (avx2::supported_at_runtime())
  {
    return Isa::avx2;
  }
#endif
  return Isa::scalar;
}

}  // namespace

Isa active_isa()
{
  static const Isa isa = detect_isa();
  return isa;
}

const char *isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Complex cdotc(std::size_t n, const Complex *x, const Complex *y)
{
#if defined(DISSIPAX_BUILD_AVX2)
  if (active_isa() == Isa::avx2)
  {
    return avx2::cdotc(n, x, y);
  }
#endif
  return scalar::cdotc(n, x, y);
}

void caxpy(std::size_t n, Complex a, const Complex *x, Complex *y)
{
#if defined(DISSIPAX_BUILD_AVX2)
  if (active_isa() == Isa::avx2)
  {
    avx2::caxpy(n, a, x, y);
    return;
  }
#endif
  scalar::caxpy(n, a, x, y);
}

void cscal(std::size_t n, Complex a, Complex *x)
{
#if defined(DISSIPAX_BUILD_AVX2)
  if (active_isa() == Isa::avx2)
  {
    avx2::cscal(n, a, x);
    return;
  }
#endif
  scalar::cscal(n, a, x);
}

double cnrm2sq(std::size_t n, const Complex *x)
{
#if defined(DISSIPAX_BUILD_AVX2)
  if (active_isa() == Isa::avx2)
  {
    return avx2::cnrm2sq(n, x);
  }
#endif
  return scalar::cnrm2sq(n, x);
}

}  // namespace dissipax::kernels
