#include "hyperlog/quadrature.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <vector>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

// ---------------------------------------------------------------------------
// tanh-sinh node tables, cached per working precision. For t > 0 the nodes
// come in mirror pairs {delta, 1-delta} sharing one weight. Completed levels
// are immutable and stored in a deque, so references handed out stay valid
// while other threads extend the table under the cache mutex.
// ---------------------------------------------------------------------------

struct TSNode {
  Real delta;   // distance of the pair to the nearer endpoint
  Real weight;  // (pi/2) cosh(t) * 2 delta (1-delta), h excluded
};

struct TSTable {
  Real t_max;
  Real w_center;                       // node at x = 1/2
  std::deque<std::vector<TSNode>> levels;  // levels[L]: new nodes at spacing 2^-L
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

TSTable& table_for_locked(unsigned digits) {
  static std::map<unsigned, TSTable> cache;
  auto it = cache.find(digits);
  if (it != cache.end()) return it->second;
  TSTable t;
  // Generous range: integrands may carry endpoint powers close to -1, so the
  // usable tail is decided adaptively per integral; the table just has to
  // reach far enough for exponents down to about -0.98.
  Real lim = (digits + 10) * log(Real(10));
  t.t_max = asinh(50 * lim / real_pi());
  t.w_center = real_pi() / 4;
  return cache.emplace(digits, std::move(t)).first->second;
}

struct TSView {
  Real t_max;
  Real w_center;
  TSTable* table;  // extended only under the cache mutex
};

TSView table_for(unsigned digits) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  TSTable& t = table_for_locked(digits);
  return {t.t_max, t.w_center, &t};
}

const std::vector<TSNode>& level_nodes(const TSView& view, int level) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  TSTable& tab = *view.table;
  while (static_cast<int>(tab.levels.size()) <= level) {
    int L = static_cast<int>(tab.levels.size());
    Real h = pow(Real(2), -L);
    std::vector<TSNode> nodes;
    // level 0: all integer multiples; level L>0: odd multiples of 2^-L
    long k = 1;
    long step = L == 0 ? 1 : 2;
    const Real half_pi = real_pi() / 2;
    for (;; k += step) {
      Real t = k * h;
      if (t > tab.t_max) break;
      Real s = half_pi * sinh(t);
      Real em = exp(-2 * s);
      Real delta = em / (1 + em);
      Real weight = half_pi * cosh(t) * 2 * delta * (1 - delta);
      nodes.push_back({delta, weight});
    }
    tab.levels.push_back(std::move(nodes));
  }
  return tab.levels[level];
}

}  // namespace

QuadResult tanh_sinh_01(const Fn01& f, const Real& tol, int max_level) {
  TSView tab = table_for(working_digits());
  QuadResult res;
  res.evaluations = 0;

  Real half(Real(1) / 2);
  Real sum = tab.w_center * f(half, half);
  ++res.evaluations;
  Real prev(0);
  bool have_prev = false;
  const Real tiny = pow(Real(10), -static_cast<int>(working_digits()) - 6);

  for (int L = 0; L <= max_level; ++L) {
    int consecutive_small = 0;
    for (const TSNode& n : level_nodes(tab, L)) {
      Real contrib = n.weight * (f(1 - n.delta, n.delta) + f(n.delta, 1 - n.delta));
      res.evaluations += 2;
      sum += contrib;
      // adaptive truncation: weighted contributions decay double-exponentially
      if (abs(contrib) < tiny * (abs(sum) + 1)) {
        if (++consecutive_small >= 4) break;
      } else {
        consecutive_small = 0;
      }
    }
    Real h = pow(Real(2), -L);
    Real I = h * sum;
    if (have_prev && L >= 3) {
      Real err = abs(I - prev);
      if (err <= tol * (std::max)(Real(1), abs(I)) / 2 || err <= tiny * abs(I)) {
        res.value = I;
        res.error = err + abs(I) * real_eps();
        return res;
      }
    }
    prev = I;
    have_prev = true;
  }
  throw ToleranceNotMet("tanh_sinh_01: level cap reached before tolerance");
}

QuadResult tanh_sinh_0inf(const Fn01& f, const Real& tol, int max_level) {
  QuadResult head = tanh_sinh_01(f, tol / 2, max_level);
  QuadResult tail = tanh_sinh_01(
      [&](const Real& x, const Real&) {
        Real v = 1 / x;
        return f(v, 1 - v) * v * v;
      },
      tol / 2, max_level);
  return {head.value + tail.value, head.error + tail.error,
          head.evaluations + tail.evaluations};
}

QuadResult quad_1d(const IntegrandSpec& spec, const Real& tol) {
  spec.validate_poles();
  Rational mn = spec.min_exponent();
  if (mn <= Rational(-1))
    throw NonConvergent("endpoint exponent <= -1; use the regularized route");
  PreparedIntegrand f(spec);
  auto fn = [&](const Real& x, const Real& omx) { return f(x, omx); };
  if (spec.domain == IntegrandSpec::Domain::HalfLine) {
    if (const auto* pr = std::get_if<PowerRational>(&spec.form)) {
      long degn = static_cast<long>(pr->num.size()) - 1;
      long degd = static_cast<long>(pr->den.size()) - 1;
      if (to_double(pr->mu) + degn - degd >= -1)
        throw NonConvergent("integrand does not decay at infinity");
    }
    return tanh_sinh_0inf(fn, tol);
  }
  return tanh_sinh_01(fn, tol);
}

// ---------------------------------------------------------------------------
// Gauss-Legendre tables for the contour piece (integrands analytic in t).
// ---------------------------------------------------------------------------

namespace {

struct GLTable {
  std::vector<Real> x, w;  // on [-1,1]
};

const GLTable& gl_table(unsigned digits, int n) {
  static std::map<std::pair<unsigned, int>, GLTable> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(digits, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  GLTable t;
  t.x.resize(n);
  t.w.resize(n);
  const Real one(1);
  for (int i = 0; i < n; ++i) {
    // Newton from the Chebyshev-like initial guess
    Real x = cos(real_pi() * (i + Real(3) / 4) / (n + Real(1) / 2));
    for (int iter = 0; iter < 60; ++iter) {
      Real p0(1), p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      Real dp = n * (x * p1 - p0) / (x * x - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < pow(Real(10), -static_cast<int>(digits) - 5)) break;
    }
    Real p0(1), p1 = x;
    for (int k = 2; k <= n; ++k) {
      Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    Real dp = n * (x * p1 - p0) / (x * x - 1);
    t.x[i] = x;
    t.w[i] = 2 / ((1 - x * x) * dp * dp);
  }
  return cache.emplace(key, std::move(t)).first->second;
}

Complex circle_integral(const Real& alpha, const FnC& f, const Real& eps,
                        const Real& tol, long& evals) {
  // int_0^1 e(( alpha+1) t) f(eps e(t)) dt, spectrally convergent in n
  const Real two_pi = 2 * real_pi();
  Complex prev;
  bool have_prev = false;
  for (int n : {48, 72, 108, 162, 243, 364}) {
    const GLTable& tab = gl_table(working_digits(), n);
    Complex acc;
    for (int i = 0; i < n; ++i) {
      Real t = (tab.x[i] + 1) / 2;
      Real ang = two_pi * t;
      Complex z = polar(eps, ang);
      Complex branch = polar(Real(1), ang * (alpha + 1));
      acc += Complex(tab.w[i] / 2) * branch * f(z);
    }
    evals += n;
    if (have_prev && abs(acc - prev) <= tol * (abs(acc) + 1) / 4) return acc;
    prev = acc;
    have_prev = true;
  }
  throw ToleranceNotMet("poch_contour: circle quadrature did not settle");
}

}  // namespace

QuadResult poch_contour(const Real& alpha, const Fn01& f_real, const FnC& f_complex,
                        const Real& eps, const Real& tol) {
  if (alpha == floor(alpha)) throw IntegerAlpha("exponent must not be an integer");
  if (eps <= 0 || eps >= 1) throw BadRadius("eps must lie in (0,1)");

  QuadResult res;
  // [eps, 1] piece, x = eps + (1-eps) y
  Real w = 1 - eps;
  QuadResult line = tanh_sinh_01(
      [&](const Real& y, const Real& omy) {
        Real x = eps + w * y;
        return w * pow(x, alpha) * f_real(x, w * omy);
      },
      tol / 2);
  res.evaluations = line.evaluations;

  // weighted circle at radius eps
  Complex circ = circle_integral(alpha, f_complex, eps, tol / 2, res.evaluations);
  const Real two_pi = 2 * real_pi();
  Complex full = Complex(Real(0), two_pi) * Complex(pow(eps, alpha + 1)) * circ;
  Complex e_alpha(cos(two_pi * alpha), sin(two_pi * alpha));
  Complex reg = full / (e_alpha - Complex(Real(1)));

  Real value = line.value + reg.re;
  res.value = value;
  res.error = line.error + abs(reg.im) + abs(value) * real_eps() * 4;
  return res;
}

QuadResult poch_contour(const Real& alpha, const IntegrandSpec& spec,
                        const Real& eps, const Real& tol) {
  spec.validate_poles();
  Real dist = spec.distance_to_origin_pole();
  if (eps >= dist) throw BadRadius("eps reaches the nearest pole");
  PreparedIntegrand f(spec);
  return poch_contour(
      alpha, [&](const Real& x, const Real& omx) { return f(x, omx) / pow(x, f.mu()); },
      [&](const Complex& z) { return f.rational_part(z); }, eps, tol);
}

QuadResult gamma1_double(const Real& a1, const Real& a2, const Real& a3,
                         const Real& tol, int max_level) {
  if (!(a1 > 0 && a1 + a2 > 0 && a1 + a3 > 0))
    throw NonConvergent("gamma1_double requires a1, a1+a2, a1+a3 > 0");
  const Real A = a1 + a2, B = a1 + a3, C = a1 + a2 + a3;

  TSView tab = table_for(working_digits());
  QuadResult res;

  // Node u-values below u_cut cannot contribute: the slowest-decaying
  // direction carries u^min(a1, A, B) against a double-exponential weight.
  const Real digits_r(static_cast<int>(working_digits()) + 6);
  const Real min_exp = (std::min)({a1, A, B});
  const Real u_cut = pow(Real(10), -digits_r / min_exp);

  // flattened (u, w) node list built in lockstep with the level loop;
  // u is the distance 1-s so the corner factor 1-st = u+v-uv stays exact
  std::vector<Real> us = {Real(1) / 2};
  std::vector<Real> ws = {tab.w_center};

  Real prev(0);
  bool have_prev = false;
  for (int L = 0; L <= max_level; ++L) {
    for (const TSNode& n : level_nodes(tab, L)) {
      if (n.delta < u_cut) break;
      us.push_back(n.delta);
      ws.push_back(n.weight);
      us.push_back(1 - n.delta);
      ws.push_back(n.weight);
    }
    const size_t count = us.size();
    std::vector<Real> P(count), Q(count);
    for (size_t i = 0; i < count; ++i) {
      P[i] = pow(us[i], A - 1) * ws[i];
      Q[i] = pow(us[i], B - 1) * ws[i];
    }
    // s<->t fold: one kernel power per unordered pair
    Real sum(0);
    for (size_t i = 0; i < count; ++i) {
      Real diag = pow(2 * us[i] - us[i] * us[i], -C);
      sum += P[i] * Q[i] * diag;
      for (size_t j = i + 1; j < count; ++j) {
        Real K = pow(us[i] + us[j] - us[i] * us[j], -C);
        sum += (P[i] * Q[j] + P[j] * Q[i]) * K;
      }
    }
    res.evaluations += static_cast<long>(count * (count + 1) / 2);
    Real h = pow(Real(2), -L);
    Real I = h * h * sum;
    if (have_prev && L >= 4) {
      Real err = abs(I - prev);
      if (err <= tol * (std::max)(Real(1), abs(I)) / 2) {
        res.value = I;
        res.error = err + abs(I) * real_eps();
        return res;
      }
    }
    prev = I;
    have_prev = true;
  }
  throw ToleranceNotMet("gamma1_double: level cap reached before tolerance");
}

}  // namespace hyperlog
