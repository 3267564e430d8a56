#include "acx/forms/integrability.hpp"

#include <cmath>

namespace acx {

double nijenhuis_norm(const FrameContext& ctx) {
  const FrameVec& br = ctx.bracket[2][3];
  return std::sqrt(std::norm(br[0].v) + std::norm(br[1].v));
}

IntegrabilityReport integrability_check(const Geometry& geom, const Box& box, double tol) {
  IntegrabilityReport rep;
  rep.tol = tol;
  box.for_each_node([&](const Index4&, const Point& p) {
    double v = nijenhuis_norm(geom.context(p));
    if (v > rep.sup) {
      rep.sup = v;
      rep.witness = p;
    }
  });
  rep.integrable = rep.sup <= tol;
  return rep;
}

}  // namespace acx
