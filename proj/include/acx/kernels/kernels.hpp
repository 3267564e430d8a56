#pragma once

// Flat-array kernels for the hot inner loops: reductions over grid scans,
// batched 2x2 hermitian eigenvalues, and the regularized-max glue update.
// Scalar reference implementations and AVX2 variants are selected once at
// runtime; both use the same 4-lane accumulation pattern and are compiled
// with FP contraction off, so results agree bit for bit and the equivalence
// tests can compare exactly.

#include <cstddef>

namespace acx::kernels {

struct Kernels {
  double (*reduce_sum)(const double*, std::size_t);
  double (*reduce_max_abs)(const double*, std::size_t);
  double (*reduce_min)(const double*, std::size_t);
  // sum_i a[i] * b[i]
  double (*dot)(const double*, const double*, std::size_t);
  // out[i] = lambda_min of [[h00, h01], [conj h01, h11]]
  void (*lambda_min_hermitian2)(const double* h00, const double* h11, const double* h01re,
                                const double* h01im, double* out, std::size_t n);
  // out[i] = (a+b)/2 + (s/2) g((a-b)/s) with the piecewise-quadratic profile
  // g(t) = (t^2+1)/2 on |t|<=1, |t| outside
  void (*regmax_glue)(const double* a, const double* b, double s, double* out, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  const char* name;
};

// scalar reference implementations (always available)
extern const Kernels kScalar;
#if defined(__x86_64__) || defined(_M_X64)
extern const Kernels kAvx2;
#endif

// dispatched set: AVX2 when the CPU supports it and ACX_FORCE_SCALAR is not
// set in the environment, else scalar
const Kernels& get(bool force_scalar = false);

}  // namespace acx::kernels
