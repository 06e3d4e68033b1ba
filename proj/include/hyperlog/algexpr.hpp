#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperlog/precision.hpp"
#include "hyperlog/radical.hpp"

namespace hyperlog {

// Expression trees over RadicalMonomial leaves with {+,-,*,/,rational power}
// and the atomic constant pi. Everything except pi denotes an algebraic
// number by construction. Equality of values is only tested numerically (via
// ball evaluation); structural identity is what `same` provides.
class AlgExpr {
 public:
  enum class Kind { Leaf, Pi, Add, Sub, Mul, Div, Pow };

  struct Node {
    Kind kind;
    RadicalMonomial leaf;  // Kind::Leaf
    Rational expo;         // Kind::Pow
    std::shared_ptr<const Node> a, b;
  };

  AlgExpr();  // zero
  AlgExpr(long long v);
  AlgExpr(const Rational& q);
  AlgExpr(const RadicalMonomial& m);

  static AlgExpr pi();
  static AlgExpr e(const Rational& q);

  friend AlgExpr operator+(const AlgExpr&, const AlgExpr&);
  friend AlgExpr operator-(const AlgExpr&, const AlgExpr&);
  friend AlgExpr operator*(const AlgExpr&, const AlgExpr&);
  friend AlgExpr operator/(const AlgExpr&, const AlgExpr&);
  AlgExpr operator-() const;
  AlgExpr pow(const Rational& s) const;

  bool is_leaf() const;
  bool is_syntactic_zero() const;
  const RadicalMonomial& leaf() const;
  const Node& node() const { return *n_; }
  std::shared_ptr<const Node> ptr() const { return n_; }

  bool same(const AlgExpr& o) const;  // structural equality
  size_t hash() const;

  Ball eval() const;                    // at current working precision
  Ball eval(unsigned digits10) const;   // with a PrecisionGuard

  std::string to_string() const;

  static AlgExpr from_node(std::shared_ptr<const Node> n);

 private:
  std::shared_ptr<const Node> n_;
};

// Midpoint/radius evaluation at a requested precision of >= 15 digits.
Ball eval_const(const AlgExpr& x, unsigned precision_digits10);

}  // namespace hyperlog
