#pragma once

// i ddbar u in frame coefficients: i ddbar u = i sum h_pq zeta_p* ^ conj(zeta_q*)
// with h_pq = zeta_p(conj(zeta_q) u) - [zeta_p, conj(zeta_q)]^{0,1} u.
// Hermitian for real u; positivity of the current = positive semidefiniteness.

#include <array>
#include <complex>
#include <functional>

#include "acx/core/frame.hpp"
#include "acx/core/point.hpp"
#include "acx/core/scalar_field.hpp"

namespace acx {

struct Hermitian2 {
  // 2x2 complex matrix, row-major
  std::array<std::complex<double>, 4> m{};

  std::complex<double> at(int p, int q) const { return m[size_t(2 * p + q)]; }
  double hermiticity_defect() const;
  double det() const { return (m[0] * m[3] - m[1] * m[2]).real(); }
  double trace() const { return (m[0] + m[3]).real(); }
  double lambda_min() const;
  double lambda_max() const;
};

// mixed determinant: det(a + b) = det a + mixed(a, b) + det b
double mixed_det(const Hermitian2& a, const Hermitian2& b);

// h_pq as jets (order = u order - 2 in value terms; callers use values)
std::array<std::array<CJet, 2>, 2> i_ddbar_jets(const FrameContext& ctx, const RJet& u);

Hermitian2 i_ddbar(const FrameContext& ctx, const RJet& u);
Hermitian2 i_ddbar(const Geometry& geom, const ScalarField& u, const Point& p);

enum class PshVerdict { kNotPsh, kPsh, kStrictlyPsh };

struct PshReport {
  PshVerdict verdict = PshVerdict::kNotPsh;
  double min_lambda = 0;       // min over scanned points of lambda_min(h)
  Point argmin{};
  double margin = 0;           // admissible epsilon against phi = dist^2 (see strictness_margin)
  std::vector<double> lambda_field;  // per scanned node
};

// scans lambda_min(i ddbar u) over the interior nodes of `box`
PshReport psh_check(const Geometry& geom, const ScalarField& u, const Box& box,
                    double tol = 1e-9, double strict_margin = 1e-9, int interior_cells = 0);

}  // namespace acx
