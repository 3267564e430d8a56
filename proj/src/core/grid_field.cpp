#include "acx/core/grid_field.hpp"

#include <algorithm>
#include <cmath>

#include "acx/core/random.hpp"

namespace acx {

std::shared_ptr<GridField> GridField::sample(const ScalarField& f, const Box& box,
                                             Regularity reg) {
  std::vector<double> v(size_t(box.node_count()));
  box.for_each_node([&](const Index4& ix, const Point& p) {
    v[size_t(box.flat(ix))] = f.value(p);
  });
  return std::make_shared<GridField>(box, std::move(v), reg);
}

RJet GridField::node_jet(const Index4& ix) const {
  RJet j;
  j.ord = 2;
  j.v = at(ix);
  Index4 a = ix, b = ix;
  for (int k = 0; k < 4; ++k) {
    const int lo = std::max(1, std::min(ix[k], box_.res[k] - 2));
    a = ix; b = ix;
    a[k] = lo - 1; b[k] = lo + 1;
    // clamp to one cell inside for boundary nodes; callers should stay
    // in the interior anyway
    const double hk = box_.h[k];
    const double fm = at(a), fp = at(b);
    Index4 c = ix; c[k] = lo;
    const double f0 = at(c);
    j.g[k] = (fp - fm) / (2 * hk);
    j.h[sym_index(k, k)] = (fp - 2 * f0 + fm) / (hk * hk);
  }
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l) {
      const int ck = std::max(1, std::min(ix[k], box_.res[k] - 2));
      const int cl = std::max(1, std::min(ix[l], box_.res[l] - 2));
      Index4 pp = ix, pm = ix, mp = ix, mm = ix;
      pp[k] = ck + 1; pp[l] = cl + 1;
      pm[k] = ck + 1; pm[l] = cl - 1;
      mp[k] = ck - 1; mp[l] = cl + 1;
      mm[k] = ck - 1; mm[l] = cl - 1;
      j.h[sym_index(k, l)] = (at(pp) - at(pm) - at(mp) + at(mm)) / (4 * box_.h[k] * box_.h[l]);
    }
  return j;
}

RJet GridField::jet(const Point& p) const {
  Index4 near;
  bool on_node = true;
  std::array<double, 4> off{};
  for (int k = 0; k < 4; ++k) {
    double t = (p[k] - box_.lo[k]) / box_.h[k];
    int i = int(std::lround(t));
    i = std::max(0, std::min(i, box_.res[k] - 1));
    near[k] = i;
    off[k] = p[k] - (box_.lo[k] + i * box_.h[k]);
    if (std::fabs(off[k]) > 1e-12 * box_.h[k]) on_node = false;
  }
  RJet j = node_jet(near);
  if (on_node) return j;
  // shift the degree-2 Taylor polynomial to p
  RJet r;
  r.ord = j.ord;
  r.v = j.v;
  for (int k = 0; k < 4; ++k) r.v += j.g[k] * off[k];
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) r.v += 0.5 * j.hess(k, l) * off[k] * off[l];
  for (int k = 0; k < 4; ++k) {
    r.g[k] = j.g[k];
    for (int l = 0; l < 4; ++l) r.g[k] += j.hess(k, l) * off[l];
  }
  r.h = j.h;
  return r;
}

std::shared_ptr<GridField> GridField::mollify(double width) const {
  auto out = std::make_shared<GridField>(*this);
  for (int axis = 0; axis < 4; ++axis) {
    const double hk = box_.h[axis];
    const int m = std::max(1, int(std::floor(width / hk)));
    std::vector<double> w(size_t(2 * m + 1));
    for (int t = -m; t <= m; ++t) {
      double u = double(t) / (m + 0.5);
      w[size_t(t + m)] = (1 - u * u) * (1 - u * u);
    }
    const std::vector<double> src = out->v_;
    box_.for_each_node([&](const Index4& ix, const Point&) {
      double acc = 0, norm = 0;
      Index4 n = ix;
      for (int t = -m; t <= m; ++t) {
        int s = ix[axis] + t;
        if (s < 0 || s >= box_.res[axis]) continue;
        n[axis] = s;
        acc += w[size_t(t + m)] * src[size_t(box_.flat(n))];
        norm += w[size_t(t + m)];
      }
      out->v_[size_t(box_.flat(ix))] = acc / norm;
    });
  }
  return out;
}

}  // namespace acx
