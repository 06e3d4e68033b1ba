#include "hyperlog/closedform.hpp"

#include <numeric>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

void check_off_unit_interval(const RadicalMonomial& c) {
  PrecisionGuard guard(40);
  Ball b = c.eval();
  if (abs(b.mid.im) > b.rad + real_eps()) return;
  Real re = b.mid.re;
  if (re >= -b.rad && re <= 1 + b.rad)
    throw PoleOnPath("c lies on [0,1]");
}

}  // namespace

LogCombination base_log_integral(long long n, long long m, const RadicalMonomial& c) {
  if (m < 1) throw InvalidExponent("m must be positive");
  if (c.is_zero()) throw PoleOnPath("c = 0");
  check_off_unit_interval(c);
  if (n <= 0 && n % m == 0)
    throw InvalidExponent("exponent n/m is a non-positive integer");

  const AlgExpr cX(c);
  AlgExpr mult(Rational(1));
  AlgExpr add;  // zero
  long long k = n;
  while (k > m) {
    // Phi_k = c Phi_(k-m) - m/(k-m)
    add = add - mult * AlgExpr(Rational(m, k - m));
    mult = mult * cX;
    k -= m;
  }
  while (k <= 0) {
    // Phi_k = (Phi_(k+m) + m/k)/c
    mult = mult / cX;
    add = add + mult * AlgExpr(Rational(m, k));
    k += m;
  }

  // 0 < k <= m: gamma^(k-m) * (-sum_i e(-ki/m) log(1 - e(i/m)/gamma))
  RadicalMonomial gamma = c.pow(Rational(1, m));
  RadicalMonomial gamma_inv = gamma.pow(Rational(-1));
  RadicalMonomial lead = gamma.pow(Rational(k - m));
  LogCombination base;
  for (long long i = 0; i < m; ++i) {
    RadicalMonomial coeff = lead * RadicalMonomial::e(Rational(-k * i, m));
    AlgExpr arg = AlgExpr(Rational(1)) - AlgExpr(RadicalMonomial::e(Rational(i, m)) * gamma_inv);
    base.add_term(-AlgExpr(coeff), arg);
  }

  LogCombination out = base.scaled(mult);
  out.add_constant(add);
  out.normalize();
  return out;
}

LogCombination digamma_integral(long long n, long long nprime, long long m) {
  if (m < 1 || n <= 0 || nprime <= 0 || n > m || nprime > m)
    throw InvalidExponent("digamma_integral requires 0 < n, n' <= m");
  LogCombination out;
  if (n == nprime) return out;
  for (long long i = 1; i < m; ++i) {
    AlgExpr coeff = AlgExpr::e(Rational(-n * i, m)) - AlgExpr::e(Rational(-nprime * i, m));
    AlgExpr arg = AlgExpr(Rational(1)) - AlgExpr::e(Rational(i, m));
    out.add_term(coeff, arg);
  }
  out.normalize();
  return out;
}

LogCombination digamma_difference(const Rational& a, const Rational& b) {
  if (a <= Rational(0) || b <= Rational(0))
    throw InvalidExponent("digamma_difference requires positive arguments");
  Rational constant(0);
  Rational ar = a, br = b;
  while (ar > Rational(1)) {
    ar -= 1;
    constant += Rational(1) / ar;  // psi(x+1) = psi(x) + 1/x
  }
  while (br > Rational(1)) {
    br -= 1;
    constant -= Rational(1) / br;
  }
  // ar, br now lie in (0,1]; psi(1) enters through n = m in the Gauss sum
  LogCombination out;
  if (ar != br) {
    long long M = std::lcm(ar.denominator(), br.denominator());
    out = digamma_integral(ar.numerator() * (M / ar.denominator()),
                           br.numerator() * (M / br.denominator()), M);
  }
  out.add_constant(AlgExpr(constant));
  return out;
}

LogCombination closed_form_integral(const Rational& alpha,
                                    const std::vector<AlgExpr>& num,
                                    const std::vector<RadicalMonomial>& roots,
                                    bool allow_regularized) {
  // distinct-roots check (numeric with radius; conservative)
  {
    PrecisionGuard guard(40);
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j) {
        Ball d = roots[i].eval() - roots[j].eval();
        if (contains_zero(d)) throw RepeatedRoot("repeated denominator root");
      }
    for (const auto& r : roots) {
      Ball b = r.eval();
      if (abs(b.mid.im) <= b.rad + real_eps() && b.mid.re >= -b.rad &&
          b.mid.re <= 1 + b.rad)
        throw PoleOnPath("denominator root on [0,1]");
    }
  }

  size_t ord = 0;
  while (ord < num.size() && num[ord].is_syntactic_zero()) ++ord;
  LogCombination out;
  if (ord == num.size()) return out;  // zero numerator

  if (alpha + Rational(static_cast<long long>(ord)) <= Rational(-1)) {
    if (!allow_regularized)
      throw NonConvergent("leading exponent <= -1 without regularization");
    if (is_integer(alpha))
      throw IntegerAlpha("regularized route requires a non-integer exponent");
  }

  // polynomial quotient when deg N >= #roots
  std::vector<AlgExpr> rem = num;
  std::vector<AlgExpr> quot;
  const size_t mroots = roots.size();
  if (mroots == 0) {
    quot = rem;
    rem.clear();
  } else if (rem.size() > mroots) {
    // long division by the monic prod (x - root_j)
    std::vector<AlgExpr> den(mroots + 1);
    den[0] = AlgExpr(Rational(1));
    size_t filled = 0;
    for (const auto& r : roots) {
      ++filled;
      // multiply current polynomial by (x - r)
      std::vector<AlgExpr> next(filled + 1);
      for (size_t i = 0; i <= filled; ++i) {
        AlgExpr v;
        if (i > 0) v = v + den[i - 1];
        if (i <= filled - 1) v = v - den[i] * AlgExpr(r);
        next[i] = v;
      }
      for (size_t i = 0; i <= filled; ++i) den[i] = next[i];
    }
    // den now holds prod(x-root) coefficients, ascending, monic of degree mroots
    quot.assign(rem.size() - mroots, AlgExpr());
    for (size_t i = rem.size(); i-- > mroots;) {
      AlgExpr c = rem[i];
      quot[i - mroots] = c;
      for (size_t j = 0; j <= mroots; ++j)
        rem[i - mroots + j] = rem[i - mroots + j] - c * den[j];
    }
    rem.resize(mroots);
  }

  // quotient part: int_P x^(alpha+k) dx = 1/(alpha+k+1)
  for (size_t kk = 0; kk < quot.size(); ++kk) {
    if (quot[kk].is_syntactic_zero()) continue;
    Rational expo = alpha + Rational(static_cast<long long>(kk)) + 1;
    if (expo == Rational(0))
      throw IntegerAlpha("regularized power integral has a pole at alpha+k+1 = 0");
    out.add_constant(quot[kk] * AlgExpr(Rational(1) / expo));
  }

  // pole terms: A_j * int_P x^alpha/(x - rho_j) dx = -A_j * BLI(alpha+1, rho_j)
  Rational shifted = alpha + 1;
  for (size_t j = 0; j < mroots; ++j) {
    AlgExpr rho(roots[j]);
    AlgExpr numerator;
    for (size_t i = rem.size(); i-- > 0;) numerator = numerator * rho + rem[i];
    AlgExpr denom(Rational(1));
    for (size_t l = 0; l < mroots; ++l) {
      if (l == j) continue;
      denom = denom * (rho - AlgExpr(roots[l]));
    }
    AlgExpr aj = numerator / denom;
    if (aj.is_syntactic_zero()) continue;
    LogCombination pole =
        base_log_integral(shifted.numerator(), shifted.denominator(), roots[j]);
    out += pole.scaled(-aj);
  }
  out.normalize();
  return out;
}

AlgExpr cos_pi(const Rational& q) {
  // (e(q/2) + e(-q/2))/2
  return (AlgExpr::e(q / 2) + AlgExpr::e(-q / 2)) * AlgExpr(Rational(1, 2));
}

AlgExpr sin_pi(const Rational& q) {
  // (e(q/2) - e(-q/2))/(2i) with 1/(2i) = e(3/4)/2
  return (AlgExpr::e(q / 2) - AlgExpr::e(-q / 2)) *
         AlgExpr(RadicalMonomial::e(Rational(3, 4)) *
                 RadicalMonomial::from_rational(Rational(1, 2)));
}

const char* to_string(TrigKind k) {
  switch (k) {
    case TrigKind::cos_2m: return "cos_2m";
    case TrigKind::cos_2m_shift: return "cos_2m_shift";
    case TrigKind::sin_3m_g2: return "sin_3m_g2";
    case TrigKind::sin_3m_g3: return "sin_3m_g3";
    case TrigKind::sin_4m_g2: return "sin_4m_g2";
    case TrigKind::cos_4m_g3: return "cos_4m_g3";
  }
  return "?";
}

LogCombination trig_correction(TrigKind kind, const Rational& alpha) {
  RadicalMonomial coeff;
  AlgExpr denom;
  switch (kind) {
    case TrigKind::cos_2m:
      if (frac(alpha) == Rational(1, 2)) throw TrigPole("cos(pi a) = 0");
      coeff = RadicalMonomial::prime_power(2, 2 * alpha);
      denom = cos_pi(alpha);
      break;
    case TrigKind::cos_2m_shift:
      if (frac(alpha) == Rational(0)) throw TrigPole("cos(pi a - pi/2) = 0");
      coeff = RadicalMonomial::prime_power(2, 2 * alpha - 1);
      denom = cos_pi(alpha - Rational(1, 2));
      break;
    case TrigKind::sin_3m_g2:
      if (frac(alpha + Rational(1, 3)) == Rational(0))
        throw TrigPole("sin(pi a + pi/3) = 0");
      coeff = RadicalMonomial::prime_power(3, 3 * alpha);
      denom = sin_pi(alpha + Rational(1, 3));
      break;
    case TrigKind::sin_3m_g3:
      if (frac(alpha + Rational(2, 3)) == Rational(0))
        throw TrigPole("sin(pi a + 2pi/3) = 0");
      coeff = RadicalMonomial::prime_power(3, 3 * alpha);
      denom = sin_pi(alpha + Rational(2, 3));
      break;
    case TrigKind::sin_4m_g2:
      if (frac(alpha + Rational(1, 4)) == Rational(0))
        throw TrigPole("sin(pi a + pi/4) = 0");
      // 4^(3a-1)/sqrt2 = 2^(6a - 5/2)
      coeff = RadicalMonomial::prime_power(2, 6 * alpha - Rational(5, 2));
      denom = sin_pi(alpha + Rational(1, 4));
      break;
    case TrigKind::cos_4m_g3:
      if (frac(alpha - Rational(1, 4)) == Rational(0))
        throw TrigPole("cos(pi a + pi/4) = 0");
      coeff = RadicalMonomial::prime_power(2, 6 * alpha - Rational(5, 2));
      denom = cos_pi(alpha + Rational(1, 4));
      break;
  }
  LogCombination out(AlgExpr(coeff) * AlgExpr::pi() / denom);
  return out;
}

IntegrandSpec trig_defining_integrand(TrigKind kind, const Rational& alpha) {
  PowerRational pr;
  switch (kind) {
    case TrigKind::cos_2m:
      // 2 (4 v^2)^a / (v^2 + 1)
      pr.scale = RadicalMonomial::prime_power(2, 2 * alpha + 1);
      pr.mu = 2 * alpha;
      pr.den = {Rational(1), Rational(0), Rational(1)};
      pr.roots = {RadicalMonomial::i(), RadicalMonomial::e(Rational(3, 4))};
      break;
    case TrigKind::cos_2m_shift:
      pr.scale = RadicalMonomial::prime_power(2, 2 * alpha);
      pr.mu = 2 * alpha - 1;
      pr.den = {Rational(1), Rational(0), Rational(1)};
      pr.roots = {RadicalMonomial::i(), RadicalMonomial::e(Rational(3, 4))};
      break;
    case TrigKind::sin_3m_g2:
      // 3 (27 v^3)^a / (v^3 + 1)
      pr.scale = RadicalMonomial::prime_power(3, 3 * alpha + 1);
      pr.mu = 3 * alpha;
      pr.den = {Rational(1), Rational(0), Rational(0), Rational(1)};
      break;
    case TrigKind::sin_3m_g3:
      pr.scale = RadicalMonomial::prime_power(3, 3 * alpha + 1);
      pr.mu = 3 * alpha + 1;
      pr.den = {Rational(1), Rational(0), Rational(0), Rational(1)};
      break;
    case TrigKind::sin_4m_g2:
      // (4v)^(4a) / (4 v^4 + 1)
      pr.scale = RadicalMonomial::prime_power(2, 8 * alpha);
      pr.mu = 4 * alpha;
      pr.den = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(4)};
      break;
    case TrigKind::cos_4m_g3:
      // 2 (4v)^(4a) v^2 / (4 v^4 + 1)
      pr.scale = RadicalMonomial::prime_power(2, 8 * alpha + 1);
      pr.mu = 4 * alpha + 2;
      pr.den = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(4)};
      break;
  }
  IntegrandSpec spec;
  spec.form = pr;
  spec.domain = IntegrandSpec::Domain::HalfLine;
  return spec;
}

}  // namespace hyperlog
