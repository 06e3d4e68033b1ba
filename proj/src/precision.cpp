#include "hyperlog/precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace hyperlog {

unsigned working_digits() { return Real::default_precision(); }

Real real_pi() { return boost::math::constants::pi<Real>(); }

Real real_eps() {
  return pow(Real(10), -static_cast<int>(working_digits()) + 2);
}

Real to_real(const Rational& q) { return Real(q.numerator()) / q.denominator(); }

Complex Complex::operator/(const Complex& o) const {
  Real d = o.re * o.re + o.im * o.im;
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex pow(const Complex& z, const Real& s) {
  if (z.im == 0 && z.re > 0) return Complex(pow(z.re, s));
  return exp(Complex(s) * log(z));
}

Complex sqrt(const Complex& z) { return pow(z, Real(1) / 2); }

Complex polar(const Real& r, const Real& theta) {
  return {r * cos(theta), r * sin(theta)};
}

Complex unit_root(const Rational& q) {
  Rational f = frac(q);
  if (f == Rational(0)) return Complex(Real(1));
  if (2 * f == Rational(1)) return Complex(Real(-1));
  if (4 * f == Rational(1)) return Complex(Real(0), Real(1));
  if (4 * f == Rational(3)) return Complex(Real(0), Real(-1));
  Real t = 2 * real_pi() * to_real(f);
  return {cos(t), sin(t)};
}

std::string to_decimal(const Real& x, unsigned digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string to_decimal(const Complex& z, unsigned digits) {
  if (z.im == 0) return to_decimal(z.re, digits);
  std::string s = to_decimal(z.re, digits);
  if (z.im > 0)
    s += " + " + to_decimal(z.im, digits) + "*i";
  else
    s += " - " + to_decimal(-z.im, digits) + "*i";
  return s;
}

namespace {
Real op_slack(const Complex& mid) { return real_eps() * (abs(mid) + 1); }
}  // namespace

Ball operator+(const Ball& a, const Ball& b) {
  Complex m = a.mid + b.mid;
  return {m, a.rad + b.rad + op_slack(m)};
}

Ball operator-(const Ball& a, const Ball& b) {
  Complex m = a.mid - b.mid;
  return {m, a.rad + b.rad + op_slack(m)};
}

Ball operator-(const Ball& a) { return {-a.mid, a.rad}; }

Ball operator*(const Ball& a, const Ball& b) {
  Complex m = a.mid * b.mid;
  Real r = abs(a.mid) * b.rad + abs(b.mid) * a.rad + a.rad * b.rad;
  return {m, r + op_slack(m)};
}

bool contains_zero(const Ball& a) { return abs(a.mid) <= a.rad; }

Ball operator/(const Ball& a, const Ball& b) {
  Real bm = abs(b.mid);
  if (bm <= 2 * b.rad) throw DivisionNearZero("division by a ball containing zero");
  Complex m = a.mid / b.mid;
  // |a/b - m| <= (ra + |m| rb) / (|b| - rb)
  Real r = (a.rad + abs(m) * b.rad) / (bm - b.rad);
  return {m, r + op_slack(m)};
}

Ball ball_log(const Ball& a) {
  Real am = abs(a.mid);
  if (am <= 2 * a.rad) throw DivisionNearZero("log of a ball containing zero");
  if (a.mid.re < 0 && abs(a.mid.im) <= a.rad) {
    // Values known to rounding accuracy on the negative axis take the
    // principal reading arg = +pi; genuinely fuzzy balls stay ambiguous.
    if (a.rad <= 100 * real_eps() * (am + 1)) {
      Complex m(log(am), real_pi());
      return {m, a.rad / (am - a.rad) + op_slack(m)};
    }
    throw BranchAmbiguity("log argument ball overlaps the negative real axis");
  }
  Complex m = log(a.mid);
  Real r = a.rad / (am - a.rad);
  return {m, r + op_slack(m)};
}

Ball ball_pow(const Ball& a, const Rational& s) {
  if (s == Rational(0)) return Ball::exact(Complex(Real(1)));
  Real am = abs(a.mid);
  if (am <= 2 * a.rad) {
    if (s.numerator() > 0 && am == 0 && a.rad == 0)
      return Ball::exact(Complex(Real(0)));
    throw DivisionNearZero("pow of a ball containing zero");
  }
  Real se = to_real(s);
  Complex m;
  if (is_integer(s)) {
    // integer powers do not touch the branch cut
    long long e = s.numerator();
    bool inv = e < 0;
    if (inv) e = -e;
    Complex acc(Real(1)), base = a.mid;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    m = inv ? Complex(Real(1)) / acc : acc;
  } else {
    if (a.mid.re < 0 && abs(a.mid.im) <= a.rad)
      throw BranchAmbiguity("pow argument ball overlaps the negative real axis");
    m = pow(a.mid, se);
  }
  // d(z^s) = s z^(s-1) dz  =>  |dm| ~ |s| |m| |dz|/|z|
  Real r = abs(m) * (abs(se) * a.rad / (am - a.rad));
  return {m, r + op_slack(m)};
}

Ball ball_pi() { return Ball(Complex(real_pi())); }

}  // namespace hyperlog
