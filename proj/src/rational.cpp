#include "hyperlog/rational.hpp"

#include <stdexcept>

namespace hyperlog {

long long rat_floor(const Rational& q) {
  long long n = q.numerator(), d = q.denominator();
  long long f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

Rational frac(const Rational& q) { return q - rat(rat_floor(q)); }

bool is_integer(const Rational& q) { return q.denominator() == 1; }

Rational rat_pow(const Rational& q, long long e) {
  if (e < 0) {
    if (q.numerator() == 0) throw std::domain_error("rat_pow: 0 to negative power");
    return rat_pow(Rational(q.denominator(), q.numerator()), -e);
  }
  Rational r(1), b = q;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational parse_rational(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) throw std::invalid_argument("empty rational");
  std::string t = s.substr(a, b - a + 1);
  size_t slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(t));
    long long num = std::stoll(t.substr(0, slash));
    long long den = std::stoll(t.substr(slash + 1));
    return Rational(num, den);
  } catch (const boost::bad_rational&) {
    throw std::invalid_argument("bad rational: " + s);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

}  // namespace hyperlog
