#pragma once

// The fourth-order composition (i ddbar)^2 = dbar theta thetabar partial
// + partial thetabar theta dbar (the third chain vanishes for n = 2), and the
// canonical vector field T_J extracted from it by probing with the four
// coordinate functions.

#include <array>
#include <complex>
#include <vector>

#include "acx/core/frame.hpp"
#include "acx/core/point.hpp"
#include "acx/core/scalar_field.hpp"
#include "acx/forms/form_value.hpp"

namespace acx {

struct Iddbar2Value {
  double value = 0;        // real part of the (2,2) frame component
  double imag_residual = 0;
};

// (i ddbar)^2 u evaluated on (zeta1, zeta2, conj zeta1, conj zeta2)
Iddbar2Value iddbar_squared(const FrameContext& ctx, const RJet& u);
Iddbar2Value iddbar_squared(const Geometry& geom, const ScalarField& u, const Point& p);

// 2 Re( ddbar u(F2, zb1) - ddbar u(F1, zb2) ) with
// F_q = [[zeta1, zeta2]^{0,1}, conj zeta_q]^{1,0}
double tj_correction(const FrameContext& ctx, const RJet& u);

struct TJValue {
  std::array<double, 4> t{};   // coordinate components
  double imag_residual = 0;    // worst imaginary residue across the probes
};

TJValue tj_value(const FrameContext& ctx);
TJValue tj_value(const Geometry& geom, const Point& p);

// T_J sampled over a grid
struct RealVectorFieldTJ {
  Box box;
  std::vector<std::array<double, 4>> values;  // per node
  double worst_imag_residual = 0;
  double sup_norm = 0;
};

RealVectorFieldTJ tj_field(const Geometry& geom, const Box& box);

// closed forms for the J_a family (alpha, beta as printed; gamma, delta with
// the directional factor -(zeta2 + conj zeta2)a, which is what the direct
// bracket computation yields; T = zb2(|beta|^2) zeta2 + conj)
struct JaClosedForms {
  std::complex<double> alpha, beta, gamma, delta;
  double beta_sq;                 // |beta|^2
  std::array<double, 4> t{};      // closed-form T components (coordinates)
};

JaClosedForms ja_closed_forms(const ScalarField& a, const Point& p);

// sup over the family and grid of |(i ddbar)^2 u| / (|T_J u| dens(omega^2)
// + |dens(i ddbar u ^ omega)| + delta)
struct Lemma54Report {
  double ratio = 0;
  Point argmax{};
};
Lemma54Report lemma54_probe(const Geometry& geom, const std::vector<FieldPtr>& family,
                            const Box& box, double delta = 1e-12, int interior_cells = 0);

}  // namespace acx
