#include "hyperlog/algexpr.hpp"

#include <boost/functional/hash.hpp>

#include <functional>
#include <sstream>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

using Node = AlgExpr::Node;
using Kind = AlgExpr::Kind;

std::shared_ptr<const Node> make_leaf(RadicalMonomial m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Leaf;
  n->leaf = std::move(m);
  return n;
}

std::shared_ptr<const Node> make_node(Kind k, std::shared_ptr<const Node> a,
                                      std::shared_ptr<const Node> b,
                                      Rational expo = Rational(0)) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  n->expo = expo;
  return n;
}

bool leaf_rational(const Node& n, Rational& out) {
  if (n.kind != Kind::Leaf || !n.leaf.is_rational()) return false;
  out = n.leaf.rational_value();
  return true;
}

}  // namespace

AlgExpr::AlgExpr() : n_(make_leaf(RadicalMonomial())) {}
AlgExpr::AlgExpr(long long v) : n_(make_leaf(RadicalMonomial::from_rational(Rational(v)))) {}
AlgExpr::AlgExpr(const Rational& q) : n_(make_leaf(RadicalMonomial::from_rational(q))) {}
AlgExpr::AlgExpr(const RadicalMonomial& m) : n_(make_leaf(m)) {}

AlgExpr AlgExpr::pi() {
  return from_node(make_node(Kind::Pi, nullptr, nullptr));
}

AlgExpr AlgExpr::e(const Rational& q) { return AlgExpr(RadicalMonomial::e(q)); }

AlgExpr AlgExpr::from_node(std::shared_ptr<const Node> n) {
  AlgExpr x;
  x.n_ = std::move(n);
  return x;
}

bool AlgExpr::is_leaf() const { return n_->kind == Kind::Leaf; }

bool AlgExpr::is_syntactic_zero() const {
  return is_leaf() && n_->leaf.is_zero();
}

const RadicalMonomial& AlgExpr::leaf() const { return n_->leaf; }

AlgExpr operator+(const AlgExpr& x, const AlgExpr& y) {
  if (x.is_syntactic_zero()) return y;
  if (y.is_syntactic_zero()) return x;
  Rational a, b;
  if (leaf_rational(*x.n_, a) && leaf_rational(*y.n_, b)) return AlgExpr(a + b);
  return AlgExpr::from_node(make_node(Kind::Add, x.n_, y.n_));
}

AlgExpr operator-(const AlgExpr& x, const AlgExpr& y) {
  if (y.is_syntactic_zero()) return x;
  Rational a, b;
  if (leaf_rational(*x.n_, a) && leaf_rational(*y.n_, b)) return AlgExpr(a - b);
  return AlgExpr::from_node(make_node(Kind::Sub, x.n_, y.n_));
}

AlgExpr operator*(const AlgExpr& x, const AlgExpr& y) {
  if (x.is_syntactic_zero() || y.is_syntactic_zero()) return AlgExpr();
  if (x.is_leaf() && x.n_->leaf.is_one()) return y;
  if (y.is_leaf() && y.n_->leaf.is_one()) return x;
  if (x.is_leaf() && y.is_leaf()) return AlgExpr(x.n_->leaf * y.n_->leaf);
  return AlgExpr::from_node(make_node(Kind::Mul, x.n_, y.n_));
}

AlgExpr operator/(const AlgExpr& x, const AlgExpr& y) {
  if (y.is_syntactic_zero()) throw DivisionNearZero("division by syntactic zero");
  if (y.is_leaf() && y.n_->leaf.is_one()) return x;
  if (x.is_syntactic_zero()) return AlgExpr();
  if (x.is_leaf() && y.is_leaf()) return AlgExpr(x.n_->leaf / y.n_->leaf);
  return AlgExpr::from_node(make_node(Kind::Div, x.n_, y.n_));
}

AlgExpr AlgExpr::operator-() const { return AlgExpr(Rational(-1)) * *this; }

AlgExpr AlgExpr::pow(const Rational& s) const {
  if (s == Rational(0)) return AlgExpr(Rational(1));
  if (s == Rational(1)) return *this;
  if (is_leaf()) return AlgExpr(n_->leaf.pow(s));
  return from_node(make_node(Kind::Pow, n_, nullptr, s));
}

bool AlgExpr::same(const AlgExpr& o) const {
  std::function<bool(const Node&, const Node&)> eq = [&](const Node& x,
                                                         const Node& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
      case Kind::Leaf: return x.leaf == y.leaf;
      case Kind::Pi: return true;
      case Kind::Pow: return x.expo == y.expo && eq(*x.a, *y.a);
      default: return eq(*x.a, *y.a) && eq(*x.b, *y.b);
    }
  };
  return eq(*n_, *o.n_);
}

size_t AlgExpr::hash() const {
  std::function<size_t(const Node&)> h = [&](const Node& n) -> size_t {
    size_t seed = static_cast<size_t>(n.kind);
    if (n.kind == Kind::Leaf) {
      boost::hash_combine(seed, n.leaf.unity().numerator());
      boost::hash_combine(seed, n.leaf.unity().denominator());
      for (const auto& [p, e] : n.leaf.exponents()) {
        boost::hash_combine(seed, p);
        boost::hash_combine(seed, e.numerator());
        boost::hash_combine(seed, e.denominator());
      }
      boost::hash_combine(seed, n.leaf.is_zero());
      return seed;
    }
    if (n.kind == Kind::Pow) {
      boost::hash_combine(seed, n.expo.numerator());
      boost::hash_combine(seed, n.expo.denominator());
    }
    if (n.a) boost::hash_combine(seed, h(*n.a));
    if (n.b) boost::hash_combine(seed, h(*n.b));
    return seed;
  };
  return h(*n_);
}

Ball AlgExpr::eval() const {
  switch (n_->kind) {
    case Kind::Leaf: return n_->leaf.eval();
    case Kind::Pi: return ball_pi();
    case Kind::Add: return from_node(n_->a).eval() + from_node(n_->b).eval();
    case Kind::Sub: return from_node(n_->a).eval() - from_node(n_->b).eval();
    case Kind::Mul: return from_node(n_->a).eval() * from_node(n_->b).eval();
    case Kind::Div: return from_node(n_->a).eval() / from_node(n_->b).eval();
    case Kind::Pow: return ball_pow(from_node(n_->a).eval(), n_->expo);
  }
  throw Error("unreachable");
}

Ball AlgExpr::eval(unsigned digits10) const {
  PrecisionGuard guard(digits10 + 10);
  Ball b = eval();
  Real cap = boost::multiprecision::pow(Real(10), -static_cast<int>(digits10) + 2);
  if (b.rad > cap) throw ToleranceNotMet("eval radius exceeds requested precision");
  return b;
}

Ball eval_const(const AlgExpr& x, unsigned precision_digits10) {
  if (precision_digits10 < 15) throw BadRadius("precision must be >= 15 digits");
  return x.eval(precision_digits10);
}

namespace {

int prec_level(const Node& n) {
  switch (n.kind) {
    case Kind::Add:
    case Kind::Sub: return 0;
    case Kind::Mul:
    case Kind::Div: return 1;
    case Kind::Pow: return 2;
    case Kind::Pi: return 3;
    case Kind::Leaf: {
      // a leaf may print as a product or carry a sign
      RadicalMonomial m = n.leaf;
      std::string s = m.to_string();
      if (s.find('-') != std::string::npos) return 0;
      return s.find('*') != std::string::npos ? 1 : 3;
    }
  }
  return 3;
}

void print_node(std::ostringstream& os, const Node& n, int parent_level) {
  int level = prec_level(n);
  bool paren = level < parent_level;
  if (paren) os << "(";
  switch (n.kind) {
    case Kind::Leaf: os << n.leaf.to_string(); break;
    case Kind::Pi: os << "pi"; break;
    case Kind::Add:
      print_node(os, *n.a, 0);
      os << " + ";
      print_node(os, *n.b, 1);
      break;
    case Kind::Sub:
      print_node(os, *n.a, 0);
      // a - (negative leaf) reads better as a + |leaf|
      if (n.b->kind == Kind::Leaf && !n.b->leaf.is_zero() &&
          n.b->leaf.coefficient() < Rational(0)) {
        os << " + ";
        RadicalMonomial neg = n.b->leaf * RadicalMonomial::from_rational(Rational(-1));
        Node tmp;
        tmp.kind = Kind::Leaf;
        tmp.leaf = neg;
        print_node(os, tmp, 1);
      } else {
        os << " - ";
        print_node(os, *n.b, 1);
      }
      break;
    case Kind::Mul:
      print_node(os, *n.a, 1);
      os << "*";
      print_node(os, *n.b, 2);
      break;
    case Kind::Div:
      print_node(os, *n.a, 1);
      os << "/";
      print_node(os, *n.b, 2);
      break;
    case Kind::Pow:
      print_node(os, *n.a, 3);
      os << "^(" << to_string(n.expo) << ")";
      break;
  }
  if (paren) os << ")";
}

}  // namespace

std::string AlgExpr::to_string() const {
  std::ostringstream os;
  print_node(os, *n_, 0);
  return os.str();
}

}  // namespace hyperlog
