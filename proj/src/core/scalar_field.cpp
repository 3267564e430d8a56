#include "acx/core/scalar_field.hpp"

#include <cmath>

#include "acx/core/random.hpp"

namespace acx {

std::vector<double> MaxField::radial_breaks(const Point& center, double rmax) const {
  // locate radial crossings of a - b by bisection on a coarse scan
  std::vector<double> out;
  auto diff = [&](double r) {
    Point p = center;
    p[0] += r;  // radial probe along the first axis; both inputs radial in practice
    return a_->value(p) - b_->value(p);
  };
  const int n = 256;
  double prev = diff(rmax * 1e-9);
  for (int i = 1; i <= n; ++i) {
    double r = rmax * i / n;
    double cur = diff(r);
    if ((prev < 0) != (cur < 0)) {
      double lo = rmax * (i - 1) / double(n), hi = r;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((diff(mid) < 0) == (prev < 0)) lo = mid; else hi = mid;
      }
      out.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  for (double b : a_->radial_breaks(center, rmax)) out.push_back(b);
  for (double b : b_->radial_breaks(center, rmax)) out.push_back(b);
  return out;
}

FieldPtr random_polynomial_field(unsigned long long seed, int deg, double amplitude) {
  Rng rng(seed);
  struct Term { std::array<int, 4> e; double c; };
  std::vector<Term> terms;
  for (int e0 = 0; e0 <= deg; ++e0)
    for (int e1 = 0; e1 + e0 <= deg; ++e1)
      for (int e2 = 0; e2 + e1 + e0 <= deg; ++e2)
        for (int e3 = 0; e3 + e2 + e1 + e0 <= deg; ++e3)
          terms.push_back({{e0, e1, e2, e3}, uniform(rng, -1.0, 1.0) * amplitude});
  return make_field([terms](const std::array<RJet, 4>& x) {
    RJet s(0.0);
    for (const auto& t : terms) {
      RJet m(t.c);
      for (int k = 0; k < 4; ++k)
        if (t.e[size_t(k)] > 0) m = m * powi(x[size_t(k)], t.e[size_t(k)]);
      s += m;
    }
    return s;
  });
}

}  // namespace acx
