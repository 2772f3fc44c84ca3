// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

// AVX2/FMA variants of the complex vector kernels. Complex doubles are stored
// interleaved (re, im), two complexes per 256-bit lane pair.

#include <immintrin.h>

#include "dissipax/kernels.hpp"

namespace dissipax::kernels::avx2
{

bool supported_at_runtime()
{
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace
{
inline double hsum(__m256d v)
{
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}
}  // namespace

Complex cdotc(std::size_t n, const Complex *x, const Complex *y)
{
  const double *xd = reinterpret_cast<const double *>(x);
  const double *yd = reinterpret_cast<const double *>(y);
  // odd-lane sign flip turns [xr*yi, xi*yr] into xr*yi - xi*yr after summation
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
  {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    const __m256d ysw = _mm256_mul_pd(_mm256_permute_pd(yv, 0b0101), sign);
    acc_im = _mm256_fmadd_pd(xv, ysw, acc_im);
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; i < n; ++i)
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
  const double *xd = reinterpret_cast<const double *>(x);
  double *yd = reinterpret_cast<double *>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
  {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d xsw = _mm256_permute_pd(xv, 0b0101);
    // (ar*xr - ai*xi, ar*xi + ai*xr) via fmaddsub
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xsw));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  for (; i < n; ++i)
  {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Complex(a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr);
  }
}

void cscal(std::size_t n, Complex a, Complex *x)
{
  double *xd = reinterpret_cast<double *>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
  {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d xsw = _mm256_permute_pd(xv, 0b0101);
    _mm256_storeu_pd(xd + 2 * i, _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xsw)));
  }
  for (; i < n; ++i)
  {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = Complex(a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr);
  }
}

double cnrm2sq(std::size_t n, const Complex *x)
{
  const double *xd = reinterpret_cast<const double *>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
  {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i)
  {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

}  // namespace dissipax::kernels::avx2
