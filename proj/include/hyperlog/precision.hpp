#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "hyperlog/errors.hpp"
#include "hyperlog/rational.hpp"

namespace hyperlog {

// All floating-point kernels run on mpfr with a runtime-selectable number of
// decimal digits. Every public entry point installs a PrecisionGuard, so
// internal temporaries inherit it. Expression templates are off: plain value
// semantics keep the Complex/Ball layers straightforward.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0, boost::multiprecision::allocate_dynamic>,
    boost::multiprecision::et_off>;

struct PrecisionGuard {
  unsigned saved;
  explicit PrecisionGuard(unsigned digits10) : saved(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionGuard() { Real::default_precision(saved); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;
};

unsigned working_digits();
Real real_pi();
Real real_eps();  // 10^-(working_digits-2), the per-op rounding model

Real to_real(const Rational& q);

// Minimal complex type over Real. std::complex is only specified for the
// builtin floating types, so we keep our own.
struct Complex {
  Real re, im;
  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex operator-() const { return {-re, -im}; }
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex& o) const;
  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
};

Real abs(const Complex& z);
Real arg(const Complex& z);  // principal, in (-pi, pi]
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex pow(const Complex& z, const Real& s);
Complex sqrt(const Complex& z);
Complex polar(const Real& r, const Real& theta);
Complex unit_root(const Rational& q);  // e(q) = exp(2*pi*i*q)

std::string to_decimal(const Real& x, unsigned digits);
std::string to_decimal(const Complex& z, unsigned digits);

// Complex midpoint with an error radius. Radii follow first-order
// propagation with a per-operation rounding allowance; they are bounds in
// the practical sense required here, not formally certified enclosures.
struct Ball {
  Complex mid;
  Real rad;

  Ball() : mid(), rad(0) {}
  explicit Ball(Complex m) : mid(std::move(m)), rad(real_eps() * (abs(mid) + 1)) {}
  Ball(Complex m, Real r) : mid(std::move(m)), rad(std::move(r)) {}

  static Ball exact(Complex m) { return Ball(std::move(m), Real(0)); }
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator-(const Ball& a);
Ball operator*(const Ball& a, const Ball& b);
Ball operator/(const Ball& a, const Ball& b);  // throws DivisionNearZero
Ball ball_log(const Ball& a);                  // throws BranchAmbiguity near the cut
Ball ball_pow(const Ball& a, const Rational& s);
Ball ball_pi();

bool contains_zero(const Ball& a);

}  // namespace hyperlog
