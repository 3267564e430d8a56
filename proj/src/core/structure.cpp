#include "acx/core/structure.hpp"

#include <cmath>
#include <sstream>

#include "acx/core/random.hpp"

namespace acx {

namespace {

class JstStructure final : public AlmostComplexStructure {
 public:
  // J dx_k = dy_k, J dy_k = -dx_k
  Mat4Jet matrix_jets(const Point&) const override {
    Mat4Jet m{};
    for (auto& e : m) e = RJet(0.0);
    m[0 * 4 + 1] = RJet(-1.0);
    m[1 * 4 + 0] = RJet(1.0);
    m[2 * 4 + 3] = RJet(-1.0);
    m[3 * 4 + 2] = RJet(1.0);
    return m;
  }
  std::string describe() const override { return "jst"; }
};

class JaStructure final : public AlmostComplexStructure {
 public:
  explicit JaStructure(FieldPtr a) : a_(std::move(a)) {}
  Mat4Jet matrix_jets(const Point& p) const override {
    RJet a = a_->jet(p);
    Mat4Jet m{};
    for (auto& e : m) e = RJet(0.0);
    m[0 * 4 + 1] = RJet(1.0);
    m[1 * 4 + 0] = RJet(-1.0);
    m[2 * 4 + 2] = a;
    m[2 * 4 + 3] = RJet(1.0);
    m[3 * 4 + 2] = -(RJet(1.0) + a * a);
    m[3 * 4 + 3] = -a;
    return m;
  }
  std::string describe() const override { return "ja"; }

 private:
  FieldPtr a_;
};

// Gauss-Jordan inverse over jets; throws on tiny pivots
std::array<RJet, 16> invert4(const std::array<RJet, 16>& a, double pivot_tol) {
  std::array<RJet, 16> m = a;
  std::array<RJet, 16> inv{};
  for (auto& e : inv) e = RJet(0.0);
  for (int i = 0; i < 4; ++i) inv[size_t(4 * i + i)] = RJet(1.0);
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::fabs(m[size_t(4 * r + col)].v) > std::fabs(m[size_t(4 * piv + col)].v)) piv = r;
    if (std::fabs(m[size_t(4 * piv + col)].v) < pivot_tol)
      throw std::runtime_error("similarity matrix is near-singular");
    if (piv != col)
      for (int c = 0; c < 4; ++c) {
        std::swap(m[size_t(4 * piv + c)], m[size_t(4 * col + c)]);
        std::swap(inv[size_t(4 * piv + c)], inv[size_t(4 * col + c)]);
      }
    RJet d = acx::inv(m[size_t(4 * col + col)]);
    for (int c = 0; c < 4; ++c) {
      m[size_t(4 * col + c)] = m[size_t(4 * col + c)] * d;
      inv[size_t(4 * col + c)] = inv[size_t(4 * col + c)] * d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      RJet f = m[size_t(4 * r + col)];
      if (f.v == 0.0 && f.g == std::array<double, 4>{}) continue;
      for (int c = 0; c < 4; ++c) {
        m[size_t(4 * r + c)] -= f * m[size_t(4 * col + c)];
        inv[size_t(4 * r + c)] -= f * inv[size_t(4 * col + c)];
      }
    }
  }
  return inv;
}

RJet det4(const std::array<RJet, 16>& a) {
  // expansion by minors on jets (16 terms); fine for validation scans
  auto m = [&](int i, int j) { return a[size_t(4 * i + j)]; };
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
           m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
           m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
  };
  return m(0, 0) * det3(1, 2, 3, 1, 2, 3) - m(0, 1) * det3(1, 2, 3, 0, 2, 3) +
         m(0, 2) * det3(1, 2, 3, 0, 1, 3) - m(0, 3) * det3(1, 2, 3, 0, 1, 2);
}

class SimilarityStructure final : public AlmostComplexStructure {
 public:
  explicit SimilarityStructure(std::function<std::array<RJet, 16>(const Point&)> S)
      : S_(std::move(S)) {}
  Mat4Jet matrix_jets(const Point& p) const override {
    std::array<RJet, 16> S = S_(p);
    std::array<RJet, 16> Sinv = invert4(S, 1e-6);
    static const double jst[16] = {0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0};
    Mat4Jet out{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        RJet s(0.0);
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l)
            if (jst[4 * k + l] != 0)
              s += S[size_t(4 * i + k)] * (jst[4 * k + l] * Sinv[size_t(4 * l + j)]);
        out[size_t(4 * i + j)] = s;
      }
    return out;
  }
  std::string describe() const override { return "similarity"; }

 private:
  std::function<std::array<RJet, 16>(const Point&)> S_;
};

class ProviderStructure final : public AlmostComplexStructure {
 public:
  explicit ProviderStructure(std::function<Mat4Jet(const Point&)> f) : f_(std::move(f)) {}
  Mat4Jet matrix_jets(const Point& p) const override { return f_(p); }
  std::string describe() const override { return "custom"; }

 private:
  std::function<Mat4Jet(const Point&)> f_;
};

}  // namespace

StructurePtr jst_structure() { return std::make_shared<JstStructure>(); }

StructurePtr ja_structure(FieldPtr a) { return std::make_shared<JaStructure>(std::move(a)); }

StructureReport validate_structure(const AlmostComplexStructure& J, const Box& box, double tol) {
  StructureReport rep;
  rep.worst = 0;
  box.for_each_node([&](const Index4&, const Point& p) {
    auto m = J.matrix(p);
    double worst_here = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0;
        for (int k = 0; k < 4; ++k) s += m[size_t(4 * i + k)] * m[size_t(4 * k + j)];
        if (i == j) s += 1.0;
        worst_here = std::max(worst_here, std::fabs(s));
      }
    if (worst_here > rep.worst) {
      rep.worst = worst_here;
      rep.worst_point = p;
    }
  });
  rep.ok = rep.worst <= tol;
  return rep;
}

StructurePtr make_structure(std::function<Mat4Jet(const Point&)> provider, const Box& box,
                            double tol) {
  auto s = std::make_shared<ProviderStructure>(std::move(provider));
  StructureReport rep = validate_structure(*s, box, tol);
  if (!rep.ok) {
    std::ostringstream os;
    os << "structure rejected: ||J^2 + I||_inf = " << rep.worst << " at ("
       << rep.worst_point[0] << ", " << rep.worst_point[1] << ", " << rep.worst_point[2]
       << ", " << rep.worst_point[3] << ") exceeds " << tol;
    throw StructureError(os.str(), rep);
  }
  return s;
}

StructurePtr similarity_structure(std::function<std::array<RJet, 16>(const Point&)> S,
                                  const Box& box) {
  // reject near-singular S up front
  double worst = 1e300;
  Point worst_point{};
  box.for_each_node([&](const Index4&, const Point& p) {
    double d = std::fabs(det4(S(p)).v);
    if (d < worst) {
      worst = d;
      worst_point = p;
    }
  });
  if (worst < 1e-6) {
    std::ostringstream os;
    os << "similarity_structure: |det S| = " << worst << " at (" << worst_point[0] << ", "
       << worst_point[1] << ", " << worst_point[2] << ", " << worst_point[3] << ")";
    StructureReport rep;
    rep.ok = false;
    rep.worst = worst;
    rep.worst_point = worst_point;
    throw StructureError(os.str(), rep);
  }
  return std::make_shared<SimilarityStructure>(std::move(S));
}

StructurePtr similarity_structure_seeded(unsigned long long seed, const Box& box,
                                         double amplitude) {
  std::array<FieldPtr, 16> entries;
  for (int i = 0; i < 16; ++i)
    entries[size_t(i)] = random_polynomial_field(seed * 16 + unsigned(i) + 1, 2, amplitude);
  auto S = [entries](const Point& p) {
    std::array<RJet, 16> out{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        out[size_t(4 * i + j)] = entries[size_t(4 * i + j)]->jet(p);
        if (i == j) out[size_t(4 * i + j)] += RJet(1.0);
      }
    return out;
  };
  return similarity_structure(S, box);
}

StructurePtr structure_from_spec(const std::string& spec, const Box& box) {
  if (spec == "jst") return jst_structure();
  if (spec.rfind("ja:", 0) == 0) return ja_structure(expr_field(spec.substr(3)));
  if (spec.rfind("similarity:", 0) == 0) {
    unsigned long long seed = std::stoull(spec.substr(11));
    return similarity_structure_seeded(seed, box);
  }
  throw std::invalid_argument("unknown structure spec '" + spec +
                              "' (expected jst | ja:<expr> | similarity:<seed>)");
}

}  // namespace acx
