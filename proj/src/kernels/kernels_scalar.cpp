// Scalar reference kernels. The reductions accumulate in four independent
// stride-4 lanes combined as (l0+l1)+(l2+l3); the AVX2 variants replicate the
// exact same pattern so both produce identical bits.

#include "acx/kernels/kernels.hpp"

#include <cmath>

namespace acx::kernels {

namespace {

double reduce_sum_scalar(const double* x, std::size_t n) {
  double lane[4] = {0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lane[0] += x[i];
    lane[1] += x[i + 1];
    lane[2] += x[i + 2];
    lane[3] += x[i + 3];
  }
  for (; i < n; ++i) lane[i % 4] += x[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double reduce_max_abs_scalar(const double* x, std::size_t n) {
  double lane[4] = {0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    for (int l = 0; l < 4; ++l) {
      double a = std::fabs(x[i + std::size_t(l)]);
      if (a > lane[l]) lane[l] = a;
    }
  for (; i < n; ++i) {
    double a = std::fabs(x[i]);
    if (a > lane[i % 4]) lane[i % 4] = a;
  }
  double m01 = lane[0] > lane[1] ? lane[0] : lane[1];
  double m23 = lane[2] > lane[3] ? lane[2] : lane[3];
  return m01 > m23 ? m01 : m23;
}

double reduce_min_scalar(const double* x, std::size_t n) {
  if (n == 0) return 0;
  double lane[4] = {x[0], x[0], x[0], x[0]};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    for (int l = 0; l < 4; ++l) {
      double a = x[i + std::size_t(l)];
      if (a < lane[l]) lane[l] = a;
    }
  for (; i < n; ++i)
    if (x[i] < lane[i % 4]) lane[i % 4] = x[i];
  double m01 = lane[0] < lane[1] ? lane[0] : lane[1];
  double m23 = lane[2] < lane[3] ? lane[2] : lane[3];
  return m01 < m23 ? m01 : m23;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double lane[4] = {0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    for (int l = 0; l < 4; ++l) lane[l] += a[i + std::size_t(l)] * b[i + std::size_t(l)];
  for (; i < n; ++i) lane[i % 4] += a[i] * b[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void lambda_min_scalar(const double* h00, const double* h11, const double* h01re,
                       const double* h01im, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double mid = 0.5 * (h00[i] + h11[i]);
    double d = 0.5 * (h00[i] - h11[i]);
    out[i] = mid - std::sqrt(d * d + h01re[i] * h01re[i] + h01im[i] * h01im[i]);
  }
}

void regmax_glue_scalar(const double* a, const double* b, double s, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double t = (a[i] - b[i]) / s;
    double at = std::fabs(t);
    double g = at >= 1.0 ? at : 0.5 * (t * t + 1.0);
    out[i] = 0.5 * (a[i] + b[i]) + 0.5 * s * g;
  }
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Kernels kScalar = {
    reduce_sum_scalar, reduce_max_abs_scalar, reduce_min_scalar, dot_scalar,
    lambda_min_scalar, regmax_glue_scalar, axpy_scalar, "scalar",
};

}  // namespace acx::kernels
