#include "acx/core/frame.hpp"

#include <cmath>

namespace acx {

namespace {

// solve the 4x4 complex jet system M X = I for X = M^{-1} (Gauss-Jordan,
// partial pivoting on values)
std::array<std::array<CJet, 4>, 4> invert4c(std::array<std::array<CJet, 4>, 4> m,
                                            double pivot_tol, const Point& where) {
  std::array<std::array<CJet, 4>, 4> inv{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv[size_t(i)][size_t(j)] = CJet(i == j ? 1.0 : 0.0);
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[size_t(r)][size_t(col)].v) > std::abs(m[size_t(piv)][size_t(col)].v)) piv = r;
    if (std::abs(m[size_t(piv)][size_t(col)].v) < pivot_tol)
      throw FrameDegeneracyError("frame degenerate: seeds and their J-images are dependent",
                                 where);
    if (piv != col) {
      std::swap(m[size_t(piv)], m[size_t(col)]);
      std::swap(inv[size_t(piv)], inv[size_t(col)]);
    }
    CJet d = acx::inv(m[size_t(col)][size_t(col)]);
    for (int c = 0; c < 4; ++c) {
      m[size_t(col)][size_t(c)] = m[size_t(col)][size_t(c)] * d;
      inv[size_t(col)][size_t(c)] = inv[size_t(col)][size_t(c)] * d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      CJet f = m[size_t(r)][size_t(col)];
      for (int c = 0; c < 4; ++c) {
        m[size_t(r)][size_t(c)] -= f * m[size_t(col)][size_t(c)];
        inv[size_t(r)][size_t(c)] -= f * inv[size_t(col)][size_t(c)];
      }
    }
  }
  return inv;
}

CJet det4c(const std::array<std::array<CJet, 4>, 4>& a) {
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    auto& m = a;
    return m[size_t(r0)][size_t(c0)] * (m[size_t(r1)][size_t(c1)] * m[size_t(r2)][size_t(c2)] -
                                        m[size_t(r1)][size_t(c2)] * m[size_t(r2)][size_t(c1)]) -
           m[size_t(r0)][size_t(c1)] * (m[size_t(r1)][size_t(c0)] * m[size_t(r2)][size_t(c2)] -
                                        m[size_t(r1)][size_t(c2)] * m[size_t(r2)][size_t(c0)]) +
           m[size_t(r0)][size_t(c2)] * (m[size_t(r1)][size_t(c0)] * m[size_t(r2)][size_t(c1)] -
                                        m[size_t(r1)][size_t(c1)] * m[size_t(r2)][size_t(c0)]);
  };
  return a[0][0] * det3(1, 2, 3, 1, 2, 3) - a[0][1] * det3(1, 2, 3, 0, 2, 3) +
         a[0][2] * det3(1, 2, 3, 0, 1, 3) - a[0][3] * det3(1, 2, 3, 0, 1, 2);
}

}  // namespace

FrameContext Geometry::context(const Point& p) const {
  FrameContext ctx;
  ctx.p = p;
  Mat4Jet Jm = J_->matrix_jets(p);
  const std::complex<double> iu(0.0, 1.0);

  // Z_k = X_k - i J X_k for the two seeds, then conjugates
  for (int k = 0; k < 2; ++k) {
    const auto& seed = seeds_[size_t(k)];
    for (int m = 0; m < 4; ++m) {
      RJet jx(0.0);
      for (int j = 0; j < 4; ++j)
        if (seed[size_t(j)] != 0.0) jx += seed[size_t(j)] * Jm[size_t(4 * m + j)];
      CJet comp = widen(RJet(seed[size_t(m)])) - iu * widen(jx);
      ctx.Z[size_t(k)][size_t(m)] = comp;
      ctx.Z[size_t(k + 2)][size_t(m)] = conj(comp);
    }
  }

  // coframe: rows of B^{-1} where B's columns are the frame fields
  std::array<std::array<CJet, 4>, 4> B;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) B[size_t(r)][size_t(c)] = ctx.Z[size_t(c)][size_t(r)];
  ctx.detB = real(det4c(B));
  if (std::fabs(ctx.detB.v) < degeneracy_tol_)
    throw FrameDegeneracyError("frame degenerate: |det[Z1 Z2 conj(Z1) conj(Z2)]| below tolerance",
                               p);
  ctx.C = invert4c(B, degeneracy_tol_, p);

  // bracket table in frame coefficients
  for (int A = 0; A < 4; ++A)
    for (int Bi = 0; Bi < 4; ++Bi)
      for (auto& c : ctx.bracket[size_t(A)][size_t(Bi)]) c = CJet(0.0);
  for (int A = 0; A < 4; ++A)
    for (int Bi = A + 1; Bi < 4; ++Bi) {
      std::array<CJet, 4> br;
      for (int m = 0; m < 4; ++m) {
        CJet s = ctx.Z[size_t(A)][0] * deriv(ctx.Z[size_t(Bi)][size_t(m)], 0) -
                 ctx.Z[size_t(Bi)][0] * deriv(ctx.Z[size_t(A)][size_t(m)], 0);
        for (int j = 1; j < 4; ++j)
          s += ctx.Z[size_t(A)][size_t(j)] * deriv(ctx.Z[size_t(Bi)][size_t(m)], j) -
               ctx.Z[size_t(Bi)][size_t(j)] * deriv(ctx.Z[size_t(A)][size_t(m)], j);
        br[size_t(m)] = s;
      }
      FrameVec coeffs = ctx.to_frame(br);
      ctx.bracket[size_t(A)][size_t(Bi)] = coeffs;
      for (int D = 0; D < 4; ++D)
        ctx.bracket[size_t(Bi)][size_t(A)][size_t(D)] = -coeffs[size_t(D)];
    }

  ctx.g = metric_;
  ctx.detg = (metric_[0][0] * metric_[1][1] - metric_[0][1] * metric_[1][0]).real();
  ctx.vol_factor = ctx.detg / ctx.detB.v;
  return ctx;
}

double coframe_residual(const FrameContext& ctx) {
  double worst = 0;
  for (int A = 0; A < 4; ++A)
    for (int Bi = 0; Bi < 4; ++Bi) {
      std::complex<double> s = 0;
      for (int m = 0; m < 4; ++m) s += ctx.C[size_t(A)][size_t(m)].v * ctx.Z[size_t(Bi)][size_t(m)].v;
      if (A == Bi) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

}  // namespace acx
