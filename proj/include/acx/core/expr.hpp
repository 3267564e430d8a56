#pragma once

// Arithmetic expression parser for scalar functions of (x1, y1, x2, y2).
// Grammar: + - * / ^, unary minus, parentheses, exp/log/sqrt/abs/sin/cos,
// numeric literals, and the four identifiers. Evaluation produces jets, so
// parsed expressions have exact derivatives.

#include <memory>
#include <stdexcept>
#include <string>

#include "acx/core/jet.hpp"
#include "acx/core/point.hpp"

namespace acx {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Expr {
 public:
  static Expr parse(const std::string& text);

  RJet eval(const Point& p) const;
  double value(const Point& p) const { return eval(p).v; }
  const std::string& text() const { return text_; }
  bool empty() const { return !root_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace acx
