#pragma once

// Integrability test: J is integrable iff brackets of (0,1) fields stay
// (0,1), i.e. the (1,0) part of [conj zeta1, conj zeta2] vanishes.

#include "acx/core/frame.hpp"
#include "acx/core/point.hpp"

namespace acx {

struct IntegrabilityReport {
  bool integrable = false;
  double sup = 0;      // sup over grid of |(1,0) part of [zb1, zb2]| (frame coeff norm)
  Point witness{};     // argmax point
  double tol = 0;
};

IntegrabilityReport integrability_check(const Geometry& geom, const Box& box,
                                        double tol = 1e-7);

// pointwise norm of the (1,0) part of [conj zeta1, conj zeta2]
double nijenhuis_norm(const FrameContext& ctx);

}  // namespace acx
