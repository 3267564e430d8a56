#include "acx/core/expr.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace acx {

namespace {

enum class Op { kConst, kVar, kAdd, kSub, kMul, kDiv, kPow, kNeg, kFunc };
enum class Fn { kExp, kLog, kSqrt, kAbs, kSin, kCos };

}  // namespace

struct Expr::Node {
  Op op;
  double value = 0;       // kConst
  int var = 0;            // kVar
  Fn fn = Fn::kExp;       // kFunc
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr run() {
    auto n = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return n;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw ExprError("expression error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  NodePtr parse_sum() {
    auto n = parse_term();
    for (;;) {
      if (eat('+')) n = make(Op::kAdd, n, parse_term());
      else if (eat('-')) n = make(Op::kSub, n, parse_term());
      else return n;
    }
  }
  NodePtr parse_term() {
    auto n = parse_unary();
    for (;;) {
      if (eat('*')) n = make(Op::kMul, n, parse_unary());
      else if (eat('/')) n = make(Op::kDiv, n, parse_unary());
      else return n;
    }
  }
  NodePtr parse_unary() {
    if (eat('-')) return make(Op::kNeg, parse_unary());
    if (eat('+')) return parse_unary();
    return parse_power();
  }
  NodePtr parse_power() {
    auto base = parse_primary();
    if (eat('^')) {
      auto e = parse_unary();  // right associative
      return make(Op::kPow, base, e);
    }
    return base;
  }
  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto n = parse_sum();
      if (!eat(')')) fail("missing ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    fail(std::string("unexpected character '") + c + "'");
  }
  NodePtr parse_number() {
    size_t end = pos_;
    while (end < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '.' ||
            s_[end] == 'e' || s_[end] == 'E' ||
            ((s_[end] == '+' || s_[end] == '-') && end > pos_ &&
             (s_[end - 1] == 'e' || s_[end - 1] == 'E'))))
      ++end;
    auto n = make(Op::kConst);
    try {
      const_cast<Expr::Node*>(n.get())->value = std::stod(s_.substr(pos_, end - pos_));
    } catch (const std::exception&) {
      fail("bad numeric literal");
    }
    pos_ = end;
    return n;
  }
  NodePtr parse_ident() {
    size_t end = pos_;
    while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
      ++end;
    std::string id = s_.substr(pos_, end - pos_);
    pos_ = end;
    static const struct { const char* name; int var; } kVars[] = {
        {"x1", 0}, {"y1", 1}, {"x2", 2}, {"y2", 3}};
    for (auto& v : kVars)
      if (id == v.name) {
        auto n = make(Op::kVar);
        const_cast<Expr::Node*>(n.get())->var = v.var;
        return n;
      }
    if (id == "pi") {
      auto n = make(Op::kConst);
      const_cast<Expr::Node*>(n.get())->value = 3.14159265358979323846;
      return n;
    }
    static const struct { const char* name; Fn fn; } kFns[] = {
        {"exp", Fn::kExp}, {"log", Fn::kLog},  {"sqrt", Fn::kSqrt},
        {"abs", Fn::kAbs}, {"sin", Fn::kSin},  {"cos", Fn::kCos}};
    for (auto& f : kFns)
      if (id == f.name) {
        if (!eat('(')) fail("expected '(' after function name");
        auto arg = parse_sum();
        if (!eat(')')) fail("missing ')'");
        auto n = make(Op::kFunc, arg);
        const_cast<Expr::Node*>(n.get())->fn = f.fn;
        return n;
      }
    fail("unknown identifier '" + id + "'");
  }
};

RJet eval_node(const Expr::Node& n, const std::array<RJet, 4>& xs) {
  switch (n.op) {
    case Op::kConst: return RJet(n.value);
    case Op::kVar: return xs[size_t(n.var)];
    case Op::kAdd: return eval_node(*n.a, xs) + eval_node(*n.b, xs);
    case Op::kSub: return eval_node(*n.a, xs) - eval_node(*n.b, xs);
    case Op::kMul: return eval_node(*n.a, xs) * eval_node(*n.b, xs);
    case Op::kDiv: return eval_node(*n.a, xs) / eval_node(*n.b, xs);
    case Op::kNeg: return -eval_node(*n.a, xs);
    case Op::kPow: {
      RJet base = eval_node(*n.a, xs);
      if (n.b->op == Op::kConst) {
        double e = n.b->value;
        if (e == std::floor(e) && std::fabs(e) < 64) return powi(base, int(e));
        return pow(base, e);
      }
      return exp(eval_node(*n.b, xs) * log(base));
    }
    case Op::kFunc: {
      RJet a = eval_node(*n.a, xs);
      switch (n.fn) {
        case Fn::kExp: return exp(a);
        case Fn::kLog: return log(a);
        case Fn::kSqrt: return sqrt(a);
        case Fn::kAbs: return abs(a);
        case Fn::kSin: return sin(a);
        case Fn::kCos: return cos(a);
      }
    }
  }
  throw ExprError("corrupt expression tree");
}

}  // namespace

Expr Expr::parse(const std::string& text) {
  Expr e;
  e.root_ = Parser(text).run();
  e.text_ = text;
  return e;
}

RJet Expr::eval(const Point& p) const {
  if (!root_) throw ExprError("empty expression");
  return eval_node(*root_, coord_jets(p));
}

}  // namespace acx
