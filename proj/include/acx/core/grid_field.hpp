#pragma once

// Grid-backed scalar fields: node samples with centered second-order finite
// difference jets. Off-node queries Taylor-shift the jet from the nearest
// node, so values stay O(h^2)-accurate anywhere in the interior.

#include <memory>
#include <vector>

#include "acx/core/point.hpp"
#include "acx/core/scalar_field.hpp"

namespace acx {

class GridField final : public ScalarField {
 public:
  GridField(Box box, std::vector<double> values, Regularity reg = Regularity::kC2)
      : box_(box), v_(std::move(values)), reg_(reg) {}

  static std::shared_ptr<GridField> sample(const ScalarField& f, const Box& box,
                                           Regularity reg = Regularity::kC2);

  const Box& box() const { return box_; }
  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }

  double at(const Index4& ix) const { return v_[size_t(box_.flat(ix))]; }
  double& at(const Index4& ix) { return v_[size_t(box_.flat(ix))]; }

  // centred FD jet at a node (node must be >= 1 cell from the boundary for
  // first derivatives, >= 1 for second; callers keep the 2-cell margin)
  RJet node_jet(const Index4& ix) const;

  RJet jet(const Point& p) const override;
  Regularity regularity() const override { return reg_; }

  // separable convolution with a normalized quartic kernel of half-width
  // `width` (physical units); boundary handled by kernel renormalization
  std::shared_ptr<GridField> mollify(double width) const;

 private:
  Box box_;
  std::vector<double> v_;
  Regularity reg_;
};

}  // namespace acx
