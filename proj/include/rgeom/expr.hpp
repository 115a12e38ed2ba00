#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgeom {

// Coordinate values of a single point in a chart.
using PointCoords = std::vector<double>;

// Thrown when evaluation leaves the domain of an elementary function
// (log of non-positive, division by zero, sqrt of negative) or produces
// a non-finite value. Carries the offending point.
class EvalDomainError : public std::runtime_error {
 public:
  EvalDomainError(const std::string& what, PointCoords point)
      : std::runtime_error(what), point(std::move(point)) {}
  PointCoords point;
};

// Thrown by the parser; `pos` is a 0-based offset into the source string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos(pos) {}
  std::size_t pos;
};

// Immutable symbolic expression over named coordinates.
//
// Nodes: real constants, coordinate symbols, neg/sin/cos/exp/log/sqrt,
// add/sub/mul/div, and pow with a constant real exponent. Construction
// performs constant folding and the 0/1 identities, nothing more.
class Expr {
 public:
  Expr() = default;

  static Expr constant(double v);
  static Expr coord(int index, std::string name);

  bool valid() const { return node_ != nullptr; }
  bool is_constant() const;
  double constant_value() const;  // pre: is_constant()

  // Partial derivative with respect to coordinate `index`.
  Expr diff(int index) const;

  // Numeric evaluation at a point (length = number of coordinates).
  double eval(std::span<const double> x) const;
  double eval(const PointCoords& x) const { return eval(std::span(x)); }

  // Infix rendering; parses back to an equivalent tree.
  std::string to_string() const;

  // Structural equality.
  bool equals(const Expr& other) const;

  friend Expr operator+(const Expr&, const Expr&);
  friend Expr operator-(const Expr&, const Expr&);
  friend Expr operator*(const Expr&, const Expr&);
  friend Expr operator/(const Expr&, const Expr&);
  friend Expr operator-(const Expr&);
  friend Expr pow(const Expr&, double k);
  friend Expr sin(const Expr&);
  friend Expr cos(const Expr&);
  friend Expr exp(const Expr&);
  friend Expr log(const Expr&);
  friend Expr sqrt(const Expr&);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Parses an infix expression over the given coordinate names.
// Grammar: `+ - * /`, `^` with constant exponent, parentheses,
// `sin cos exp log sqrt`, decimal literals, coordinate identifiers.
Expr parse_expr(const std::string& src, const std::vector<std::string>& coords);

// Central finite differences of `f` along one axis; the independent oracle
// used to cross-check symbolic derivatives. Step defaults: 1e-3 for orders
// 1-2, 1e-2 for order 3.
double fd_step_for_order(int order);
double fd_derivative(const Expr& e, int axis, const PointCoords& p, int order,
                     double step);

// |symbolic - central difference| for d^order/dx_axis^order at p.
double fd_check(const Expr& e, int axis, const PointCoords& p, int order);

}  // namespace rgeom
