// AVX2 kernels. Same 4-lane accumulation pattern as the scalar reference
// (one __m256d = the four stride-4 lanes), no FMA, so results are bit
// identical to the scalar kernels.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "acx/kernels/kernels.hpp"

namespace acx::kernels {

namespace {

inline double combine_sum(__m256d acc) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double reduce_sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (; i < n; ++i) lane[i % 4] += x[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double reduce_max_abs_avx2(const double* x, std::size_t n) {
  const __m256d signmask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(signmask, _mm256_loadu_pd(x + i)));
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (; i < n; ++i) {
    double a = std::fabs(x[i]);
    if (a > lane[i % 4]) lane[i % 4] = a;
  }
  double m01 = lane[0] > lane[1] ? lane[0] : lane[1];
  double m23 = lane[2] > lane[3] ? lane[2] : lane[3];
  return m01 > m23 ? m01 : m23;
}

double reduce_min_avx2(const double* x, std::size_t n) {
  if (n == 0) return 0;
  __m256d acc = _mm256_set1_pd(x[0]);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(x + i));
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (; i < n; ++i)
    if (x[i] < lane[i % 4]) lane[i % 4] = x[i];
  double m01 = lane[0] < lane[1] ? lane[0] : lane[1];
  double m23 = lane[2] < lane[3] ? lane[2] : lane[3];
  return m01 < m23 ? m01 : m23;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (; i < n; ++i) lane[i % 4] += a[i] * b[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void lambda_min_avx2(const double* h00, const double* h11, const double* h01re,
                     const double* h01im, double* out, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_loadu_pd(h00 + i);
    __m256d d = _mm256_loadu_pd(h11 + i);
    __m256d re = _mm256_loadu_pd(h01re + i);
    __m256d im = _mm256_loadu_pd(h01im + i);
    __m256d mid = _mm256_mul_pd(half, _mm256_add_pd(a, d));
    __m256d dif = _mm256_mul_pd(half, _mm256_sub_pd(a, d));
    __m256d rad = _mm256_add_pd(_mm256_mul_pd(dif, dif),
                                _mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im)));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(mid, _mm256_sqrt_pd(rad)));
  }
  for (; i < n; ++i) {
    double mid = 0.5 * (h00[i] + h11[i]);
    double d = 0.5 * (h00[i] - h11[i]);
    out[i] = mid - std::sqrt(d * d + h01re[i] * h01re[i] + h01im[i] * h01im[i]);
  }
}

void regmax_glue_avx2(const double* a, const double* b, double s, double* out, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d vs = _mm256_set1_pd(s);
  const __m256d signmask = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    __m256d t = _mm256_div_pd(_mm256_sub_pd(va, vb), vs);
    __m256d at = _mm256_andnot_pd(signmask, t);
    __m256d quad = _mm256_mul_pd(half, _mm256_add_pd(_mm256_mul_pd(t, t), one));
    __m256d g = _mm256_blendv_pd(quad, at, _mm256_cmp_pd(at, one, _CMP_GE_OQ));
    __m256d r = _mm256_add_pd(_mm256_mul_pd(half, _mm256_add_pd(va, vb)),
                              _mm256_mul_pd(half, _mm256_mul_pd(vs, g)));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) {
    double t = (a[i] - b[i]) / s;
    double at = std::fabs(t);
    double g = at >= 1.0 ? at : 0.5 * (t * t + 1.0);
    out[i] = 0.5 * (a[i] + b[i]) + 0.5 * s * g;
  }
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Kernels kAvx2 = {
    reduce_sum_avx2, reduce_max_abs_avx2, reduce_min_avx2, dot_avx2,
    lambda_min_avx2, regmax_glue_avx2, axpy_avx2, "avx2",
};

}  // namespace acx::kernels

#endif  // x86_64
