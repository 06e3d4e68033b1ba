#include "hyperlog/radical.hpp"

#include <sstream>
#include <stdexcept>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

// Trial-division factorization; magnitudes here are tiny.
void factor_into(std::map<long long, Rational>& out, long long v, const Rational& e) {
  for (long long p = 2; p * p <= v; ++p) {
    while (v % p == 0) {
      out[p] += e;
      v /= p;
    }
  }
  if (v > 1) out[v] += e;
}

}  // namespace

void RadicalMonomial::trim() {
  for (auto it = radical_.begin(); it != radical_.end();) {
    if (it->second == Rational(0))
      it = radical_.erase(it);
    else
      ++it;
  }
}

void RadicalMonomial::absorb_rational(Rational q) {
  if (q == Rational(0)) {
    zero_ = true;
    unity_ = Rational(0);
    radical_.clear();
    return;
  }
  if (q < Rational(0)) {
    unity_ = frac(unity_ + Rational(1, 2));
    q = -q;
  }
  factor_into(radical_, q.numerator(), Rational(1));
  factor_into(radical_, q.denominator(), Rational(-1));
  trim();
}

RadicalMonomial RadicalMonomial::one() {
  RadicalMonomial r;
  r.zero_ = false;
  return r;
}

RadicalMonomial RadicalMonomial::from_rational(const Rational& q) {
  RadicalMonomial r = one();
  r.absorb_rational(q);
  return r;
}

RadicalMonomial RadicalMonomial::e(const Rational& q) {
  RadicalMonomial r = one();
  r.unity_ = frac(q);
  return r;
}

RadicalMonomial RadicalMonomial::prime_power(long long base, const Rational& e) {
  if (base < 2) throw std::invalid_argument("prime_power: base must be >= 2");
  RadicalMonomial r = one();
  factor_into(r.radical_, base, e);  // composite bases split into primes
  r.trim();
  return r;
}

RadicalMonomial RadicalMonomial::i() { return e(Rational(1, 4)); }

bool RadicalMonomial::is_one() const {
  return !zero_ && unity_ == Rational(0) && radical_.empty();
}

bool RadicalMonomial::is_rational() const {
  if (zero_) return true;
  if (unity_ != Rational(0) && unity_ != Rational(1, 2)) return false;
  for (const auto& [p, e] : radical_)
    if (!is_integer(e)) return false;
  return true;
}

Rational RadicalMonomial::rational_value() const {
  if (!is_rational()) throw std::logic_error("not a rational constant");
  if (zero_) return Rational(0);
  Rational v = (unity_ == Rational(1, 2)) ? Rational(-1) : Rational(1);
  for (const auto& [p, e] : radical_) v *= rat_pow(Rational(p), e.numerator());
  return v;
}

Rational RadicalMonomial::coefficient() const {
  if (zero_) return Rational(0);
  Rational v(1);
  for (const auto& [p, e] : radical_) {
    long long fl = rat_floor(e);
    if (fl != 0) v *= rat_pow(Rational(p), fl);
  }
  if (unity_ == Rational(1, 2)) v = -v;
  return v;
}

RadicalMonomial RadicalMonomial::operator*(const RadicalMonomial& o) const {
  if (zero_ || o.zero_) return RadicalMonomial();
  RadicalMonomial r = *this;
  r.unity_ = frac(r.unity_ + o.unity_);
  for (const auto& [p, e] : o.radical_) r.radical_[p] += e;
  r.trim();
  return r;
}

RadicalMonomial RadicalMonomial::operator/(const RadicalMonomial& o) const {
  if (o.zero_) throw DivisionNearZero("division by zero monomial");
  return *this * o.pow(Rational(-1));
}

RadicalMonomial RadicalMonomial::pow(const Rational& s) const {
  if (zero_) {
    if (s.numerator() <= 0) throw DivisionNearZero("0 to a non-positive power");
    return RadicalMonomial();
  }
  RadicalMonomial r = one();
  // principal branch: read the unity argument in (-1/2, 1/2] turns
  Rational arg = (unity_ > Rational(1, 2)) ? unity_ - 1 : unity_;
  r.unity_ = frac(arg * s);
  for (const auto& [p, e] : radical_) r.radical_[p] = e * s;
  r.trim();
  return r;
}

bool RadicalMonomial::operator==(const RadicalMonomial& o) const {
  return zero_ == o.zero_ && unity_ == o.unity_ && radical_ == o.radical_;
}

Ball RadicalMonomial::eval() const {
  if (zero_) return Ball::exact(Complex(Real(0)));
  Real mag(1);
  for (const auto& [p, e] : radical_) {
    if (is_integer(e)) {
      Real b(p);
      long long k = e.numerator();
      mag *= (k >= 0) ? boost::multiprecision::pow(b, static_cast<int>(k))
                      : 1 / boost::multiprecision::pow(b, static_cast<int>(-k));
    } else {
      mag *= boost::multiprecision::pow(Real(p), to_real(e));
    }
  }
  return Ball(unit_root(unity_) * Complex(mag));
}

std::string RadicalMonomial::to_string() const {
  if (zero_) return "0";
  Rational coeff = coefficient();
  Rational u = (unity_ == Rational(1, 2)) ? Rational(0) : unity_;
  std::map<long long, Rational> roots;
  for (const auto& [p, e] : radical_) {
    Rational fe = e - Rational(rat_floor(e));
    if (fe != Rational(0)) roots[p] = fe;
  }

  std::ostringstream os;
  bool first = true;
  auto push = [&](const std::string& s) {
    if (!first) os << "*";
    os << s;
    first = false;
  };
  if (coeff != Rational(1) || (roots.empty() && u == Rational(0)))
    push(hyperlog::to_string(coeff));
  for (const auto& [p, e] : roots)
    push(std::to_string(p) + "^(" + hyperlog::to_string(e) + ")");
  if (u == Rational(1, 4))
    push("i");
  else if (u != Rational(0))
    push("e(" + hyperlog::to_string(u) + ")");
  return os.str();
}

}  // namespace hyperlog
