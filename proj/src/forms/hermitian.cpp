#include "acx/forms/hermitian.hpp"

#include <cmath>

#include "acx/kernels/kernels.hpp"

namespace acx {

double Hermitian2::hermiticity_defect() const {
  double d = std::abs(m[0].imag());
  d = std::max(d, std::abs(m[3].imag()));
  d = std::max(d, std::abs(m[1] - std::conj(m[2])));
  return d;
}

double Hermitian2::lambda_min() const {
  double a = m[0].real(), d = m[3].real();
  double mid = 0.5 * (a + d);
  double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m[1]));
  return mid - r;
}

double Hermitian2::lambda_max() const {
  double a = m[0].real(), d = m[3].real();
  double mid = 0.5 * (a + d);
  double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m[1]));
  return mid + r;
}

double mixed_det(const Hermitian2& a, const Hermitian2& b) {
  return (a.m[0] * b.m[3] + b.m[0] * a.m[3] - a.m[1] * b.m[2] - b.m[1] * a.m[2]).real();
}

std::array<std::array<CJet, 2>, 2> i_ddbar_jets(const FrameContext& ctx, const RJet& u) {
  std::array<std::array<CJet, 2>, 2> h;
  CJet uw = widen(u);
  std::array<CJet, 4> du;  // Z_A(u)
  for (int A = 0; A < 4; ++A) du[size_t(A)] = ctx.dir(A, uw);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      CJet t = ctx.dir(p, du[size_t(q + 2)]);
      const FrameVec& br = ctx.bracket[size_t(p)][size_t(q + 2)];
      for (int A = 2; A < 4; ++A) t -= br[size_t(A)] * du[size_t(A)];
      h[size_t(p)][size_t(q)] = t;
    }
  return h;
}

Hermitian2 i_ddbar(const FrameContext& ctx, const RJet& u) {
  auto hj = i_ddbar_jets(ctx, u);
  Hermitian2 h;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) h.m[size_t(2 * p + q)] = hj[size_t(p)][size_t(q)].v;
  return h;
}

Hermitian2 i_ddbar(const Geometry& geom, const ScalarField& u, const Point& p) {
  FrameContext ctx = geom.context(p);
  return i_ddbar(ctx, u.jet(p));
}

PshReport psh_check(const Geometry& geom, const ScalarField& u, const Box& box, double tol,
                    double strict_margin, int interior_cells) {
  PshReport rep;
  std::vector<double> h00, h11, hre, him;
  std::vector<Point> pts;
  auto visit = [&](const Index4&, const Point& p) {
    Hermitian2 h = i_ddbar(geom, u, p);
    h00.push_back(h.m[0].real());
    h11.push_back(h.m[3].real());
    hre.push_back(h.m[1].real());
    him.push_back(h.m[1].imag());
    pts.push_back(p);
  };
  if (interior_cells > 0)
    box.for_each_interior_node(interior_cells, visit);
  else
    box.for_each_node(visit);

  rep.lambda_field.resize(h00.size());
  kernels::get().lambda_min_hermitian2(h00.data(), h11.data(), hre.data(), him.data(),
                                       rep.lambda_field.data(), h00.size());
  rep.min_lambda = 1e300;
  for (size_t i = 0; i < rep.lambda_field.size(); ++i)
    if (rep.lambda_field[i] < rep.min_lambda) {
      rep.min_lambda = rep.lambda_field[i];
      rep.argmin = pts[i];
    }
  if (rep.min_lambda >= strict_margin)
    rep.verdict = PshVerdict::kStrictlyPsh;
  else if (rep.min_lambda >= -tol)
    rep.verdict = PshVerdict::kPsh;
  else
    rep.verdict = PshVerdict::kNotPsh;
  rep.margin = std::max(0.0, rep.min_lambda);
  return rep;
}

}  // namespace acx
