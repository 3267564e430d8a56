#include "acx/kernels/kernels.hpp"

#include <cstdlib>

namespace acx::kernels {

namespace {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Kernels* select(bool force_scalar) {
  if (force_scalar) return &kScalar;
  if (const char* env = std::getenv("ACX_FORCE_SCALAR"); env && env[0] == '1') return &kScalar;
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_supported()) return &kAvx2;
#endif
  return &kScalar;
}

}  // namespace

const Kernels& get(bool force_scalar) {
  static const Kernels* dispatched = select(false);
  if (force_scalar) return kScalar;
  return *dispatched;
}

}  // namespace acx::kernels
