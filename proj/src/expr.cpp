#include "rgeom/expr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace rgeom {

enum class Kind {
  Const,
  Coord,
  Neg,
  Sin,
  Cos,
  Exp,
  Log,
  Sqrt,
  Add,
  Sub,
  Mul,
  Div,
  Pow,  // base in a, exponent in value
};

struct Expr::Node {
  Kind kind;
  double value = 0.0;   // Const value or Pow exponent
  int coord_index = -1; // Coord only
  std::string coord_name;
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_node(Expr::Node n) {
  return std::make_shared<const Expr::Node>(std::move(n));
}

bool is_const(const NodePtr& n, double v) {
  return n->kind == Kind::Const && n->value == v;
}

double eval_node(const Expr::Node& n, std::span<const double> x,
                 const PointCoords& full_point) {
  auto fail = [&](const std::string& msg) -> double {
    throw EvalDomainError(msg, full_point);
  };
  switch (n.kind) {
    case Kind::Const:
      return n.value;
    case Kind::Coord:
      if (n.coord_index < 0 || n.coord_index >= static_cast<int>(x.size()))
        fail("coordinate index out of range for point");
      return x[n.coord_index];
    case Kind::Neg:
      return -eval_node(*n.a, x, full_point);
    case Kind::Sin:
      return std::sin(eval_node(*n.a, x, full_point));
    case Kind::Cos:
      return std::cos(eval_node(*n.a, x, full_point));
    case Kind::Exp: {
      double v = std::exp(eval_node(*n.a, x, full_point));
      if (!std::isfinite(v)) fail("exp overflow");
      return v;
    }
    case Kind::Log: {
      double u = eval_node(*n.a, x, full_point);
      if (u <= 0.0) fail("log of non-positive value");
      return std::log(u);
    }
    case Kind::Sqrt: {
      double u = eval_node(*n.a, x, full_point);
      if (u < 0.0) fail("sqrt of negative value");
      return std::sqrt(u);
    }
    case Kind::Add:
      return eval_node(*n.a, x, full_point) + eval_node(*n.b, x, full_point);
    case Kind::Sub:
      return eval_node(*n.a, x, full_point) - eval_node(*n.b, x, full_point);
    case Kind::Mul:
      return eval_node(*n.a, x, full_point) * eval_node(*n.b, x, full_point);
    case Kind::Div: {
      double den = eval_node(*n.b, x, full_point);
      if (den == 0.0) fail("division by zero");
      return eval_node(*n.a, x, full_point) / den;
    }
    case Kind::Pow: {
      double base = eval_node(*n.a, x, full_point);
      double v = std::pow(base, n.value);
      if (!std::isfinite(v)) fail("pow produced non-finite value");
      return v;
    }
  }
  return 0.0;  // unreachable
}

}  // namespace

Expr Expr::constant(double v) {
  return Expr(make_node({.kind = Kind::Const, .value = v}));
}

Expr Expr::coord(int index, std::string name) {
  Node n{.kind = Kind::Coord, .coord_index = index};
  n.coord_name = std::move(name);
  return Expr(make_node(std::move(n)));
}

bool Expr::is_constant() const {
  return node_ && node_->kind == Kind::Const;
}

double Expr::constant_value() const { return node_->value; }

Expr operator+(const Expr& a, const Expr& b) {
  if (a.node_->kind == Kind::Const && b.node_->kind == Kind::Const)
    return Expr::constant(a.node_->value + b.node_->value);
  if (is_const(a.node_, 0.0)) return b;
  if (is_const(b.node_, 0.0)) return a;
  return Expr(make_node({.kind = Kind::Add, .a = a.node_, .b = b.node_}));
}

Expr operator-(const Expr& a, const Expr& b) {
  if (a.node_->kind == Kind::Const && b.node_->kind == Kind::Const)
    return Expr::constant(a.node_->value - b.node_->value);
  if (is_const(b.node_, 0.0)) return a;
  if (is_const(a.node_, 0.0)) return -b;
  return Expr(make_node({.kind = Kind::Sub, .a = a.node_, .b = b.node_}));
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.node_->kind == Kind::Const && b.node_->kind == Kind::Const)
    return Expr::constant(a.node_->value * b.node_->value);
  if (is_const(a.node_, 0.0) || is_const(b.node_, 0.0))
    return Expr::constant(0.0);
  if (is_const(a.node_, 1.0)) return b;
  if (is_const(b.node_, 1.0)) return a;
  return Expr(make_node({.kind = Kind::Mul, .a = a.node_, .b = b.node_}));
}

Expr operator/(const Expr& a, const Expr& b) {
  if (a.node_->kind == Kind::Const && b.node_->kind == Kind::Const &&
      b.node_->value != 0.0)
    return Expr::constant(a.node_->value / b.node_->value);
  if (is_const(a.node_, 0.0) && !is_const(b.node_, 0.0))
    return Expr::constant(0.0);
  if (is_const(b.node_, 1.0)) return a;
  return Expr(make_node({.kind = Kind::Div, .a = a.node_, .b = b.node_}));
}

Expr operator-(const Expr& a) {
  if (a.node_->kind == Kind::Const) return Expr::constant(-a.node_->value);
  if (a.node_->kind == Kind::Neg) return Expr(a.node_->a);
  return Expr(make_node({.kind = Kind::Neg, .a = a.node_}));
}

Expr pow(const Expr& a, double k) {
  if (k == 0.0) return Expr::constant(1.0);
  if (k == 1.0) return a;
  if (a.node_->kind == Kind::Const) {
    double v = std::pow(a.node_->value, k);
    if (std::isfinite(v)) return Expr::constant(v);
  }
  return Expr(make_node({.kind = Kind::Pow, .value = k, .a = a.node_}));
}

#define RGEOM_UNARY(fn, kind_)                                        \
  Expr fn(const Expr& a) {                                            \
    return Expr(make_node({.kind = Kind::kind_, .a = a.node_}));      \
  }
RGEOM_UNARY(sin, Sin)
RGEOM_UNARY(cos, Cos)
RGEOM_UNARY(exp, Exp)
RGEOM_UNARY(log, Log)
RGEOM_UNARY(sqrt, Sqrt)
#undef RGEOM_UNARY

Expr Expr::diff(int index) const {
  const Node& n = *node_;
  Expr a = n.a ? Expr(n.a) : Expr();
  Expr b = n.b ? Expr(n.b) : Expr();
  switch (n.kind) {
    case Kind::Const:
      return constant(0.0);
    case Kind::Coord:
      return constant(n.coord_index == index ? 1.0 : 0.0);
    case Kind::Neg:
      return -a.diff(index);
    case Kind::Sin:
      return cos(a) * a.diff(index);
    case Kind::Cos:
      return -(sin(a) * a.diff(index));
    case Kind::Exp:
      return exp(a) * a.diff(index);
    case Kind::Log:
      return a.diff(index) / a;
    case Kind::Sqrt:
      return a.diff(index) / (constant(2.0) * sqrt(a));
    case Kind::Add:
      return a.diff(index) + b.diff(index);
    case Kind::Sub:
      return a.diff(index) - b.diff(index);
    case Kind::Mul:
      return a.diff(index) * b + a * b.diff(index);
    case Kind::Div:
      return (a.diff(index) * b - a * b.diff(index)) / (b * b);
    case Kind::Pow:
      return constant(n.value) * pow(a, n.value - 1.0) * a.diff(index);
  }
  return constant(0.0);  // unreachable
}

double Expr::eval(std::span<const double> x) const {
  PointCoords full(x.begin(), x.end());
  double v = eval_node(*node_, x, full);
  if (!std::isfinite(v))
    throw EvalDomainError("expression evaluated to non-finite value", full);
  return v;
}

bool Expr::equals(const Expr& other) const {
  struct Cmp {
    static bool eq(const Node& a, const Node& b) {
      if (a.kind != b.kind || a.value != b.value ||
          a.coord_index != b.coord_index)
        return false;
      if (bool(a.a) != bool(b.a) || bool(a.b) != bool(b.b)) return false;
      if (a.a && !eq(*a.a, *b.a)) return false;
      if (a.b && !eq(*a.b, *b.b)) return false;
      return true;
    }
  };
  return Cmp::eq(*node_, *other.node_);
}

namespace {

void print_node(const Expr::Node& n, std::ostream& os) {
  auto paren = [&](const NodePtr& c) {
    os << '(';
    print_node(*c, os);
    os << ')';
  };
  switch (n.kind) {
    case Kind::Const: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.value;
      std::string s = tmp.str();
      if (n.value < 0) {
        os << '(' << s << ')';
      } else {
        os << s;
      }
      break;
    }
    case Kind::Coord:
      os << n.coord_name;
      break;
    case Kind::Neg:
      os << "(0 - ";
      print_node(*n.a, os);
      os << ')';
      break;
    case Kind::Sin: os << "sin"; paren(n.a); break;
    case Kind::Cos: os << "cos"; paren(n.a); break;
    case Kind::Exp: os << "exp"; paren(n.a); break;
    case Kind::Log: os << "log"; paren(n.a); break;
    case Kind::Sqrt: os << "sqrt"; paren(n.a); break;
    case Kind::Add: paren(n.a); os << " + "; paren(n.b); break;
    case Kind::Sub: paren(n.a); os << " - "; paren(n.b); break;
    case Kind::Mul: paren(n.a); os << " * "; paren(n.b); break;
    case Kind::Div: paren(n.a); os << " / "; paren(n.b); break;
    case Kind::Pow: {
      paren(n.a);
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.value;
      os << " ^ (" << tmp.str() << ')';
      break;
    }
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::ostringstream os;
  print_node(*node_, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar in the header.

namespace {

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& coords)
      : src_(src), coords_(coords) {}

  Expr parse() {
    if (src_.find_first_not_of(" \t\r\n") == std::string::npos)
      throw ParseError("empty expression", 0);
    Expr e = sum();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  Expr sum() {
    Expr e = term();
    for (;;) {
      skip_ws();
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) e = e * unary();
      else if (accept('/')) e = e / unary();
      else return e;
    }
  }

  Expr unary() {
    skip_ws();
    if (accept('-')) return -unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    skip_ws();
    if (accept('^')) {
      std::size_t at = pos_;
      Expr expn = unary();
      if (!expn.is_constant())
        throw ParseError("exponent of '^' must be constant", at);
      return pow(base, expn.constant_value());
    }
    return base;
  }

  Expr atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Expr number() {
    std::size_t start = pos_;
    std::size_t consumed = 0;
    double v;
    try {
      v = std::stod(src_.substr(start), &consumed);
    } catch (const std::exception&) {
      throw ParseError("malformed number", start);
    }
    // stod accepts leading signs and hex; restrict to plain decimals.
    pos_ = start + consumed;
    return Expr::constant(v);
  }

  Expr identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_'))
      ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '(') {
      ++pos_;
      Expr arg = sum();
      expect(')');
      if (name == "sin") return sin(arg);
      if (name == "cos") return cos(arg);
      if (name == "exp") return exp(arg);
      if (name == "log") return log(arg);
      if (name == "sqrt") return sqrt(arg);
      throw ParseError("unknown function '" + name + "'", start);
    }
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] == name)
        return Expr::coord(static_cast<int>(i), name);
    throw ParseError("unknown identifier '" + name + "'", start);
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  const std::string& src_;
  const std::vector<std::string>& coords_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(const std::string& src,
                const std::vector<std::string>& coords) {
  return Parser(src, coords).parse();
}

// ---------------------------------------------------------------------------
// Finite-difference oracle.

double fd_step_for_order(int order) { return order >= 3 ? 1e-2 : 1e-3; }

double fd_derivative(const Expr& e, int axis, const PointCoords& p, int order,
                     double h) {
  PointCoords q = p;
  auto at = [&](double offset) {
    q[axis] = p[axis] + offset;
    return e.eval(q);
  };
  switch (order) {
    case 1:
      return (at(h) - at(-h)) / (2.0 * h);
    case 2:
      return (at(h) - 2.0 * at(0.0) + at(-h)) / (h * h);
    case 3:
      return (at(2.0 * h) - 2.0 * at(h) + 2.0 * at(-h) - at(-2.0 * h)) /
             (2.0 * h * h * h);
    default:
      throw std::invalid_argument("fd_derivative: order must be 1..3");
  }
}

double fd_check(const Expr& e, int axis, const PointCoords& p, int order) {
  Expr d = e;
  for (int k = 0; k < order; ++k) d = d.diff(axis);
  double sym = d.eval(p);
  double num = fd_derivative(e, axis, p, order, fd_step_for_order(order));
  return std::abs(sym - num);
}

}  // namespace rgeom
