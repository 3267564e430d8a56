#pragma once

// Points and the coordinate box with its uniform grid.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "acx/core/jet.hpp"

namespace acx {

struct Point {
  std::array<double, 4> x{};

  double operator[](int i) const { return x[i]; }
  double& operator[](int i) { return x[i]; }

  bool finite() const {
    for (double c : x)
      if (!std::isfinite(c)) return false;
    return true;
  }
  double dist2(const Point& o) const {
    double s = 0;
    for (int i = 0; i < 4; ++i) {
      double d = x[i] - o.x[i];
      s += d * d;
    }
    return s;
  }
  double norm2() const {
    double s = 0;
    for (double c : x) s += c * c;
    return s;
  }
};

inline Point operator+(Point a, const Point& b) {
  for (int i = 0; i < 4; ++i) a.x[i] += b.x[i];
  return a;
}
inline Point operator-(Point a, const Point& b) {
  for (int i = 0; i < 4; ++i) a.x[i] -= b.x[i];
  return a;
}
inline Point operator*(double c, Point a) {
  for (int i = 0; i < 4; ++i) a.x[i] *= c;
  return a;
}

// exact coordinate jets at a point
inline std::array<RJet, 4> coord_jets(const Point& p) {
  return {RJet::variable(p[0], 0), RJet::variable(p[1], 1),
          RJet::variable(p[2], 2), RJet::variable(p[3], 3)};
}

struct Index4 {
  std::array<int, 4> i{};
  int operator[](int k) const { return i[k]; }
  int& operator[](int k) { return i[k]; }
};

// Uniform node grid on [lo, hi]: res[k] nodes per axis including endpoints,
// spacing h[k] = (hi-lo)/(res-1). Cells sit between nodes.
struct Box {
  Point lo, hi;
  std::array<int, 4> res{};
  std::array<double, 4> h{};

  Box() = default;
  Box(Point lo_, Point hi_, std::array<int, 4> res_) : lo(lo_), hi(hi_), res(res_) {
    for (int k = 0; k < 4; ++k) {
      if (!(lo[k] < hi[k])) throw std::invalid_argument("Box: lo must be < hi componentwise");
      if (res[k] < 3) throw std::invalid_argument("Box: resolution must be >= 3 per axis");
      h[k] = (hi[k] - lo[k]) / double(res[k] - 1);
    }
  }
  static Box cube(double a, double b, int n) {
    return Box(Point{a, a, a, a}, Point{b, b, b, b}, {n, n, n, n});
  }

  std::int64_t node_count() const {
    return std::int64_t(res[0]) * res[1] * res[2] * res[3];
  }
  std::int64_t cell_count() const {
    return std::int64_t(res[0] - 1) * (res[1] - 1) * (res[2] - 1) * (res[3] - 1);
  }

  std::int64_t flat(const Index4& ix) const {
    return ((std::int64_t(ix[0]) * res[1] + ix[1]) * res[2] + ix[2]) * res[3] + ix[3];
  }
  Index4 unflat(std::int64_t f) const {
    Index4 ix;
    ix[3] = int(f % res[3]); f /= res[3];
    ix[2] = int(f % res[2]); f /= res[2];
    ix[1] = int(f % res[1]); f /= res[1];
    ix[0] = int(f);
    return ix;
  }
  Point node(const Index4& ix) const {
    Point p;
    for (int k = 0; k < 4; ++k) p[k] = lo[k] + h[k] * ix[k];
    return p;
  }
  std::int64_t cell_flat(const Index4& ix) const {
    return ((std::int64_t(ix[0]) * (res[1] - 1) + ix[1]) * (res[2] - 1) + ix[2]) * (res[3] - 1) + ix[3];
  }
  Index4 cell_unflat(std::int64_t f) const {
    Index4 ix;
    ix[3] = int(f % (res[3] - 1)); f /= res[3] - 1;
    ix[2] = int(f % (res[2] - 1)); f /= res[2] - 1;
    ix[1] = int(f % (res[1] - 1)); f /= res[1] - 1;
    ix[0] = int(f);
    return ix;
  }
  Point cell_center(const Index4& ix) const {
    Point p;
    for (int k = 0; k < 4; ++k) p[k] = lo[k] + h[k] * (ix[k] + 0.5);
    return p;
  }
  double cell_volume() const { return h[0] * h[1] * h[2] * h[3]; }

  bool contains(const Point& p, double margin = 0.0) const {
    for (int k = 0; k < 4; ++k)
      if (p[k] < lo[k] + margin || p[k] > hi[k] - margin) return false;
    return true;
  }
  // interior margin in units of the largest spacing
  bool interior_node(const Index4& ix, int cells = 2) const {
    for (int k = 0; k < 4; ++k)
      if (ix[k] < cells || ix[k] >= res[k] - cells) return false;
    return true;
  }

  template <class F>
  void for_each_node(F&& f) const {
    Index4 ix;
    for (ix[0] = 0; ix[0] < res[0]; ++ix[0])
      for (ix[1] = 0; ix[1] < res[1]; ++ix[1])
        for (ix[2] = 0; ix[2] < res[2]; ++ix[2])
          for (ix[3] = 0; ix[3] < res[3]; ++ix[3]) f(ix, node(ix));
  }
  template <class F>
  void for_each_interior_node(int cells, F&& f) const {
    Index4 ix;
    for (ix[0] = cells; ix[0] < res[0] - cells; ++ix[0])
      for (ix[1] = cells; ix[1] < res[1] - cells; ++ix[1])
        for (ix[2] = cells; ix[2] < res[2] - cells; ++ix[2])
          for (ix[3] = cells; ix[3] < res[3] - cells; ++ix[3]) f(ix, node(ix));
  }
  template <class F>
  void for_each_cell(F&& f) const {
    Index4 ix;
    for (ix[0] = 0; ix[0] < res[0] - 1; ++ix[0])
      for (ix[1] = 0; ix[1] < res[1] - 1; ++ix[1])
        for (ix[2] = 0; ix[2] < res[2] - 1; ++ix[2])
          for (ix[3] = 0; ix[3] < res[3] - 1; ++ix[3]) f(ix, cell_center(ix));
  }
};

}  // namespace acx
