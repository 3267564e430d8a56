#pragma once

// Scalar fields with jet access. Analytic fields are lambdas over coordinate
// jets (exact derivatives); grid fields live in grid_field.hpp.

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "acx/core/expr.hpp"
#include "acx/core/jet.hpp"
#include "acx/core/point.hpp"

namespace acx {

enum class Regularity { kC2, kC11, kLipschitz, kContinuous };

class ScalarField {
 public:
  virtual ~ScalarField() = default;
  virtual RJet jet(const Point& p) const = 0;
  virtual Regularity regularity() const { return Regularity::kC2; }
  // radii in (0, rmax) where a radial profile around `center` switches branch;
  // quadrature splits integration intervals there
  virtual std::vector<double> radial_breaks(const Point& center, double rmax) const {
    (void)center; (void)rmax;
    return {};
  }
  double value(const Point& p) const { return jet(p).v; }
};

using FieldPtr = std::shared_ptr<const ScalarField>;

template <class F>
class LambdaField final : public ScalarField {
 public:
  LambdaField(F f, Regularity reg) : f_(std::move(f)), reg_(reg) {}
  RJet jet(const Point& p) const override { return f_(coord_jets(p)); }
  Regularity regularity() const override { return reg_; }

 private:
  F f_;
  Regularity reg_;
};

template <class F>
FieldPtr make_field(F f, Regularity reg = Regularity::kC2) {
  return std::make_shared<LambdaField<F>>(std::move(f), reg);
}

inline FieldPtr constant_field(double c) {
  return make_field([c](const std::array<RJet, 4>&) { return RJet(c); });
}
inline FieldPtr coordinate_field(int axis) {
  return make_field([axis](const std::array<RJet, 4>& x) { return x[size_t(axis)]; });
}
// |z|^2 = x1^2 + y1^2 + x2^2 + y2^2
inline FieldPtr sq_norm_field() {
  return make_field([](const std::array<RJet, 4>& x) {
    return sqr(x[0]) + sqr(x[1]) + sqr(x[2]) + sqr(x[3]);
  });
}
// |z - c|^2
inline FieldPtr dist2_field(const Point& c) {
  return make_field([c](const std::array<RJet, 4>& x) {
    RJet s(0.0);
    for (int i = 0; i < 4; ++i) s += sqr(x[size_t(i)] - c[i]);
    return s;
  });
}
inline FieldPtr expr_field(const std::string& text) {
  Expr e = Expr::parse(text);
  struct ExprField final : ScalarField {
    Expr expr;
    RJet jet(const Point& p) const override { return expr.eval(p); }
  };
  auto f = std::make_shared<ExprField>();
  f->expr = std::move(e);
  return f;
}

// linear combination sum_i c_i * f_i + c0
class CombinedField final : public ScalarField {
 public:
  CombinedField(std::vector<std::pair<double, FieldPtr>> terms, double offset)
      : terms_(std::move(terms)), offset_(offset) {
    reg_ = Regularity::kC2;
    for (auto& [c, f] : terms_)
      if (int(f->regularity()) > int(reg_)) reg_ = f->regularity();
  }
  RJet jet(const Point& p) const override {
    RJet s(offset_);
    for (auto& [c, f] : terms_) s += c * f->jet(p);
    return s;
  }
  Regularity regularity() const override { return reg_; }
  std::vector<double> radial_breaks(const Point& center, double rmax) const override {
    std::vector<double> out;
    for (auto& [c, f] : terms_)
      for (double b : f->radial_breaks(center, rmax)) out.push_back(b);
    return out;
  }

 private:
  std::vector<std::pair<double, FieldPtr>> terms_;
  double offset_;
  Regularity reg_;
};

inline FieldPtr add_fields(FieldPtr a, FieldPtr b, double ca = 1.0, double cb = 1.0,
                           double offset = 0.0) {
  return std::make_shared<CombinedField>(
      std::vector<std::pair<double, FieldPtr>>{{ca, std::move(a)}, {cb, std::move(b)}}, offset);
}
inline FieldPtr scale_field(FieldPtr a, double c, double offset = 0.0) {
  return std::make_shared<CombinedField>(
      std::vector<std::pair<double, FieldPtr>>{{c, std::move(a)}}, offset);
}

// pointwise max; Lipschitz kink on the crossing set
class MaxField final : public ScalarField {
 public:
  MaxField(FieldPtr a, FieldPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  RJet jet(const Point& p) const override {
    RJet ja = a_->jet(p), jb = b_->jet(p);
    return ja.v >= jb.v ? ja : jb;
  }
  Regularity regularity() const override { return Regularity::kLipschitz; }
  std::vector<double> radial_breaks(const Point& center, double rmax) const override;

 private:
  FieldPtr a_, b_;
};

inline FieldPtr max_field(FieldPtr a, FieldPtr b) {
  return std::make_shared<MaxField>(std::move(a), std::move(b));
}

// seeded polynomial of total degree <= deg on the given scale
FieldPtr random_polynomial_field(unsigned long long seed, int deg = 3, double amplitude = 1.0);

}  // namespace acx
