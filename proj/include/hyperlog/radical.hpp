#pragma once

#include <map>
#include <string>

#include "hyperlog/precision.hpp"
#include "hyperlog/rational.hpp"

namespace hyperlog {

// An exact constant of the shape  q * e(u) * prod_p p^(e_p)  with q rational,
// u in [0,1) and rational exponents over primes. Closed under *, / and
// rational powers; powers use the principal branch (arguments are read in
// (-1/2, 1/2] turns).
class RadicalMonomial {
 public:
  RadicalMonomial() : zero_(true) {}  // the zero constant

  static RadicalMonomial one();
  static RadicalMonomial from_rational(const Rational& q);
  static RadicalMonomial e(const Rational& q);  // exp(2 pi i q)
  static RadicalMonomial prime_power(long long p, const Rational& e);
  static RadicalMonomial i();  // e(1/4)

  bool is_zero() const { return zero_; }
  bool is_one() const;
  bool is_rational() const;        // unity == 0 or 1/2 and all exponents integral
  Rational rational_value() const; // valid when is_rational()

  // The rational coefficient (sign and integer parts of the prime exponents),
  // the residual unity in [0,1) with the half-turn sign removed, and the
  // fractional radical exponents.
  Rational coefficient() const;
  Rational unity() const { return unity_; }
  const std::map<long long, Rational>& exponents() const { return radical_; }

  RadicalMonomial operator*(const RadicalMonomial& o) const;
  RadicalMonomial operator/(const RadicalMonomial& o) const;
  RadicalMonomial pow(const Rational& s) const;
  RadicalMonomial inverse() const { return pow(Rational(-1)); }

  bool operator==(const RadicalMonomial& o) const;

  Ball eval() const;  // at the current working precision
  std::string to_string() const;

 private:
  bool zero_ = false;
  Rational unity_{0};                    // in [0,1)
  std::map<long long, Rational> radical_;  // prime -> exponent, nonzero entries only

  void absorb_rational(Rational q);  // factor q into radical_/unity_
  void trim();
};

}  // namespace hyperlog
