#pragma once

// The four bidegree components of the exterior derivative on (p,q)-forms,
// evaluated pointwise against the frame. partial/dbar are first order in the
// form components; theta/thetabar are order zero (pure bracket terms).

#include "acx/forms/form_value.hpp"

namespace acx {

FormValue op_partial(const FrameContext& ctx, const FormValue& f);   // (p,q) -> (p+1,q)
FormValue op_dbar(const FrameContext& ctx, const FormValue& f);      // (p,q) -> (p,q+1)
FormValue op_theta(const FrameContext& ctx, const FormValue& f);     // (p,q) -> (p+2,q-1)
FormValue op_thetabar(const FrameContext& ctx, const FormValue& f);  // (p,q) -> (p-1,q+2)

enum class OperatorIdentity {
  kAnticommutator,  // ddbar + dbar d + theta thetabar + thetabar theta = 0
  kPartialSquared,  // partial^2 = theta dbar + dbar theta
  kDbarSquared,     // dbar^2 = thetabar partial + partial thetabar
};

// residual of one identity applied to a form value at a point (sup over
// output components)
double identity_residual(const FrameContext& ctx, const FormValue& f, OperatorIdentity id);

}  // namespace acx
