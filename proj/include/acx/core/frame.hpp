#pragma once

// Frame machinery: at each point, the (1,0) frame Z_k = X_k - i J X_k, its
// conjugates, the dual coframe (a 4x4 complex jet solve), and the table of
// pairwise Lie bracket coefficients in the frame basis. Everything downstream
// (the four operators, i ddbar, T_J, densities) consumes a FrameContext.

#include <array>
#include <complex>
#include <memory>
#include <stdexcept>

#include "acx/core/jet.hpp"
#include "acx/core/point.hpp"
#include "acx/core/structure.hpp"

namespace acx {

// frame basis indices: 0 = zeta1, 1 = zeta2, 2 = conj zeta1, 3 = conj zeta2
inline constexpr int conj_index(int A) { return (A + 2) % 4; }
inline constexpr bool is_10(int A) { return A < 2; }

struct FrameDegeneracyError : std::runtime_error {
  Point where;
  FrameDegeneracyError(const std::string& what, Point p)
      : std::runtime_error(what), where(p) {}
};

// frame-basis coefficient vector of a complex tangent vector
using FrameVec = std::array<CJet, 4>;

struct FrameContext {
  Point p;
  // coordinate components of the four frame fields: Z[A][m], order-2 jets
  std::array<std::array<CJet, 4>, 4> Z;
  // dual coframe rows: C[A][m] are the coordinate components of the covector
  // dual to Z[A]
  std::array<std::array<CJet, 4>, 4> C;
  // bracket[A][B] = frame coefficients of [Z_A, Z_B] (order-1 jets)
  std::array<std::array<FrameVec, 4>, 4> bracket;
  // hermitian metric coefficients in the frame basis and derived volumes
  std::array<std::array<std::complex<double>, 2>, 2> g;
  double detg = 0;      // real, > 0
  RJet detB;            // det [Z1 Z2 conj Z1 conj Z2]; real for J-frames
  double vol_factor = 0;  // dV / dLebesgue = detg / detB

  // directional derivative Z_A(f); drops jet order by one
  CJet dir(int A, const CJet& f) const {
    CJet s = Z[size_t(A)][0] * deriv(f, 0);
    for (int m = 1; m < 4; ++m) s += Z[size_t(A)][size_t(m)] * deriv(f, m);
    return s;
  }
  CJet dir(int A, const RJet& f) const { return dir(A, widen(f)); }

  // frame coefficients of a coordinate-component complex vector
  FrameVec to_frame(const std::array<CJet, 4>& v) const {
    FrameVec out;
    for (int A = 0; A < 4; ++A) {
      CJet s = C[size_t(A)][0] * v[0];
      for (int m = 1; m < 4; ++m) s += C[size_t(A)][size_t(m)] * v[size_t(m)];
      out[size_t(A)] = s;
    }
    return out;
  }
};

class Geometry {
 public:
  Geometry(StructurePtr J,
           std::array<std::array<double, 4>, 2> seeds = {{{1, 0, 0, 0}, {0, 0, 1, 0}}},
           std::array<std::array<std::complex<double>, 2>, 2> metric = {{{2.0, 0.0}, {0.0, 2.0}}},
           double degeneracy_tol = 1e-8)
      : J_(std::move(J)), seeds_(seeds), metric_(metric), degeneracy_tol_(degeneracy_tol) {}

  const AlmostComplexStructure& structure() const { return *J_; }
  StructurePtr structure_ptr() const { return J_; }
  const std::array<std::array<double, 4>, 2>& seeds() const { return seeds_; }
  const std::array<std::array<std::complex<double>, 2>, 2>& metric() const { return metric_; }

  FrameContext context(const Point& p) const;

 private:
  StructurePtr J_;
  std::array<std::array<double, 4>, 2> seeds_;
  std::array<std::array<std::complex<double>, 2>, 2> metric_;
  double degeneracy_tol_;
};

// duality residual max |C B - I| at a point (diagnostic)
double coframe_residual(const FrameContext& ctx);

}  // namespace acx
