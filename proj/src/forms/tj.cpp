#include "acx/forms/tj.hpp"

#include <cmath>

#include "acx/forms/hermitian.hpp"
#include "acx/forms/operators.hpp"

namespace acx {

Iddbar2Value iddbar_squared(const FrameContext& ctx, const RJet& u) {
  FormValue f = FormValue::function(u);
  FormValue c1 = op_dbar(ctx, op_theta(ctx, op_thetabar(ctx, op_partial(ctx, f))));
  FormValue c2 = op_partial(ctx, op_thetabar(ctx, op_theta(ctx, op_dbar(ctx, f))));
  std::complex<double> v = c1.c[0].v + c2.c[0].v;
  return {v.real(), std::abs(v.imag())};
}

Iddbar2Value iddbar_squared(const Geometry& geom, const ScalarField& u, const Point& p) {
  FrameContext ctx = geom.context(p);
  return iddbar_squared(ctx, u.jet(p));
}

double tj_correction(const FrameContext& ctx, const RJet& u) {
  auto h = i_ddbar_jets(ctx, u);
  const FrameVec& c01 = ctx.bracket[0][1];  // [zeta1, zeta2] frame coefficients
  // F_q = sum_{A in {2,3}} c01[A] * (1,0)-part of [Z_A, conj zeta_q]
  auto Fq = [&](int qbar) {
    std::array<CJet, 2> F{CJet(0.0), CJet(0.0)};
    for (int A = 2; A < 4; ++A) {
      const FrameVec& bb = ctx.bracket[size_t(A)][size_t(qbar)];
      for (int m = 0; m < 2; ++m) F[size_t(m)] += c01[size_t(A)] * bb[size_t(m)];
    }
    return F;
  };
  std::array<CJet, 2> F2 = Fq(3), F1 = Fq(2);
  std::complex<double> t1 = F2[0].v * h[0][0].v + F2[1].v * h[1][0].v;  // ddbar u (F2, zb1)
  std::complex<double> t2 = F1[0].v * h[0][1].v + F1[1].v * h[1][1].v;  // ddbar u (F1, zb2)
  return 2.0 * (t1 - t2).real();
}

TJValue tj_value(const FrameContext& ctx) {
  TJValue out;
  for (int m = 0; m < 4; ++m) {
    RJet coord = RJet::variable(ctx.p[m], m);
    Iddbar2Value dd = iddbar_squared(ctx, coord);
    out.t[size_t(m)] = dd.value - tj_correction(ctx, coord);
    out.imag_residual = std::max(out.imag_residual, dd.imag_residual);
  }
  return out;
}

TJValue tj_value(const Geometry& geom, const Point& p) { return tj_value(geom.context(p)); }

RealVectorFieldTJ tj_field(const Geometry& geom, const Box& box) {
  RealVectorFieldTJ f;
  f.box = box;
  f.values.resize(size_t(box.node_count()));
  box.for_each_node([&](const Index4& ix, const Point& p) {
    TJValue v = tj_value(geom, p);
    f.values[size_t(box.flat(ix))] = v.t;
    f.worst_imag_residual = std::max(f.worst_imag_residual, v.imag_residual);
    double n = 0;
    for (double c : v.t) n += c * c;
    f.sup_norm = std::max(f.sup_norm, std::sqrt(n));
  });
  return f;
}

JaClosedForms ja_closed_forms(const ScalarField& a, const Point& p) {
  const std::complex<double> iu(0.0, 1.0);
  RJet aj = a.jet(p);
  // frame fields of J_a: zeta1 = dx1 + i dy1, zeta2 = (1 - i a) dx2 + i (1 + a^2) dy2
  CJet z1a = widen(deriv(aj, 0)) + iu * widen(deriv(aj, 1));  // zeta1(a)
  CJet z2a = (CJet(1.0) - iu * widen(aj)) * widen(deriv(aj, 2)) +
             iu * (CJet(1.0) + widen(aj * aj)) * widen(deriv(aj, 3));
  CJet zb2a = conj(CJet(1.0) - iu * widen(aj)) * widen(deriv(aj, 2)) -
              iu * (CJet(1.0) + widen(aj * aj)) * widen(deriv(aj, 3));
  CJet aw = widen(aj);
  CJet pref_m = aw / (CJet(1.0) - aw * iu) - CJet(iu * 0.5);   // a/(1-ai) - i/2
  CJet pref_p = aw / (CJet(1.0) + aw * iu) + CJet(iu * 0.5);   // a/(1+ai) + i/2

  JaClosedForms out;
  out.alpha = (pref_m * z1a).v;
  out.beta = (-(pref_p * z1a)).v;
  CJet minus_sum = -(z2a + zb2a);
  out.gamma = (pref_m * minus_sum).v;
  out.delta = (-(pref_p * minus_sum)).v;

  // |beta|^2 as a jet, then T = zb2(|beta|^2) zeta2 + conj
  CJet beta_jet = -(pref_p * z1a);
  RJet b2 = norm2(beta_jet);
  out.beta_sq = b2.v;
  // zb2 directional derivative of b2
  CJet zb2_b2 = conj(CJet(1.0) - iu * widen(aj)) * widen(deriv(b2, 2)) -
                iu * (CJet(1.0) + widen(aj * aj)) * widen(deriv(b2, 3));
  std::complex<double> coef = zb2_b2.v;
  double av = aj.v;
  std::complex<double> zeta2_x2 = std::complex<double>(1.0, -av);       // zeta2 component on dx2
  std::complex<double> zeta2_y2 = std::complex<double>(0.0, 1.0 + av * av);
  out.t[0] = 0;
  out.t[1] = 0;
  out.t[2] = 2.0 * (coef * zeta2_x2).real();
  out.t[3] = 2.0 * (coef * zeta2_y2).real();
  return out;
}

Lemma54Report lemma54_probe(const Geometry& geom, const std::vector<FieldPtr>& family,
                            const Box& box, double delta, int interior_cells) {
  Lemma54Report rep;
  auto visit = [&](const Index4&, const Point& p) {
    FrameContext ctx = geom.context(p);
    TJValue tj = tj_value(ctx);
    // dens(omega^2) against the frame volume: 2 det g
    double dens_w2 = 2.0 * ctx.detg;
    for (const auto& u : family) {
      RJet uj = u->jet(p);
      Iddbar2Value dd = iddbar_squared(ctx, uj);
      double tju = 0;
      for (int m = 0; m < 4; ++m) tju += tj.t[size_t(m)] * uj.g[size_t(m)];
      Hermitian2 h = i_ddbar(ctx, uj);
      Hermitian2 g;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) g.m[size_t(2 * a + b)] = ctx.g[size_t(a)][size_t(b)];
      double dens_hw = mixed_det(h, g);  // i ddbar u ^ omega against frame volume
      double denom = std::fabs(tju) * dens_w2 + std::fabs(dens_hw) + delta;
      double ratio = std::fabs(dd.value) / denom;
      if (ratio > rep.ratio) {
        rep.ratio = ratio;
        rep.argmax = p;
      }
    }
  };
  if (interior_cells > 0)
    box.for_each_interior_node(interior_cells, visit);
  else
    box.for_each_node(visit);
  return rep;
}

}  // namespace acx
