#include "hyperlog/series.hpp"

#include <algorithm>
#include <vector>

#include "hyperlog/errors.hpp"

namespace hyperlog {

Real pochhammer(const Real& p, unsigned long k) {
  Real r(1);
  for (unsigned long j = 0; j < k; ++j) r *= p + j;
  return r;
}

namespace {

bool nonpositive_integer(const Real& p) {
  return p <= 0 && p == floor(p);
}

// Coefficients of r(N) = (N+1)(N+p3)/((N+p4)(N+p5)) as a series in 1/N.
std::vector<Real> ratio_series(const Real& p3, const Real& p4, const Real& p5,
                               int order) {
  std::vector<Real> a = {Real(1), 1 + p3, p3};         // numerator in x = 1/N
  std::vector<Real> b = {Real(1), p4 + p5, p4 * p5};   // denominator
  std::vector<Real> r(order + 1, Real(0));
  for (int t = 0; t <= order; ++t) {
    Real acc = t < 3 ? a[t] : Real(0);
    for (int u = 1; u <= std::min(t, 2); ++u) acc -= b[u] * r[t - u];
    r[t] = acc;
  }
  return r;
}

// binom(-i, j) for the shift h(N+1) -> powers of 1/N; i >= -1, j >= 0.
Real shift_binom(long i, long j) {
  if (i == -1) return j <= 1 ? Real(1) : Real(0);
  if (i == 0) return j == 0 ? Real(1) : Real(0);
  Real v(1);
  for (long t = 0; t < j; ++t) v *= Real(-(i + t)) / (t + 1);
  return v;
}

// Solve h(N) = 1 + r(N) h(N+1) for h(N) = sum_{i=-1}^{J} h_i N^-i.
// h[idx] stores h_{idx-1}.
std::vector<Real> tail_coefficients(const std::vector<Real>& r, int J) {
  std::vector<Real> h(J + 2, Real(0));
  auto g_at = [&](long w) {  // coefficient of N^-w in h(N+1)
    Real acc(0);
    for (long i = -1; i <= w && i <= J; ++i) {
      long j = w - i;
      if (j < 0) continue;
      acc += h[i + 1] * shift_binom(i, j);
    }
    return acc;
  };
  for (int t = 0; t <= J + 1; ++t) {
    // Coefficient of N^-t: h_t cancels; the new unknown is h_{t-1} with
    // linear coefficient (r_1 - (t-1)).
    // E is the order-N^-t residual with the unknowns still at zero; h_t
    // cancels between the two sides, so only h_{t-1} remains to solve for.
    Real E = t == 0 ? Real(1) : Real(0);
    for (int u = 0; u <= t + 1 && u < static_cast<int>(r.size()); ++u)
      E += r[u] * g_at(t - u);
    h[t] = -E / (r[1] - (t - 1));
  }
  return h;
}

Real eval_tail(const std::vector<Real>& h, const Real& N) {
  // h(N) = h_{-1} N + h_0 + h_1/N + ...
  Real invN = 1 / N;
  Real acc = h[0] * N;
  Real p(1);
  for (size_t idx = 1; idx < h.size(); ++idx) {
    acc += h[idx] * p;
    p *= invN;
  }
  return acc;
}

struct LevinState {
  // Standard Levin u-transform triangle on partial sums.
  std::vector<Real> num, den;
  std::vector<Real> s, a;

  void push(const Real& partial, const Real& term) {
    s.push_back(partial);
    a.push_back(term);
  }

  // Returns estimates L_k for increasing order with differences as error.
  std::pair<Real, Real> estimate(int order_cap) const {
    const long n = static_cast<long>(s.size());
    if (n < 3) return {s.empty() ? Real(0) : s.back(), Real(1)};
    const Real beta(1);
    std::vector<Real> N(n), D(n);
    for (long j = 0; j < n; ++j) {
      Real w = (beta + j) * a[j];  // u-variant remainder estimate
      if (w == 0) w = Real(1e-300);
      D[j] = 1 / w;
      N[j] = s[j] / w;
    }
    Real best = s.back(), prev = s.back(), err = abs(s.back());
    long kmax = std::min<long>(n - 1, order_cap);
    for (long k = 1; k <= kmax; ++k) {
      for (long j = 0; j < n - k; ++j) {
        Real bn = beta + j + k;
        Real c = (beta + j) * pow(bn - 1, static_cast<unsigned>(k - 1)) /
                 pow(bn, static_cast<unsigned>(k));
        N[j] = N[j + 1] - c * N[j];
        D[j] = D[j + 1] - c * D[j];
      }
      if (D[0] != 0) {
        Real est = N[0] / D[0];
        Real diff = abs(est - prev);
        if (k >= 3 && diff < err) {
          err = diff;
          best = est;
        }
        prev = est;
      }
    }
    return {best, err};
  }
};

}  // namespace

SeriesResult f32_at_1(const Real& p3, const Real& p4, const Real& p5, const Real& tol) {
  if (nonpositive_integer(p4) || nonpositive_integer(p5))
    throw Divergent("lower parameter is a non-positive integer");
  const Real margin = p4 + p5 - p3 - 2;
  const bool terminating = nonpositive_integer(p3);
  if (margin <= 0 && !terminating)
    throw Divergent("series margin p4+p5-p3-2 must be positive");

  const int digits = static_cast<int>(working_digits());
  const Real target = (std::min)(tol, pow(Real(10), -(digits - 6)));
  int J = std::clamp(static_cast<int>(ceil(-log10(target))) + 4, 12, 72);
  long N = 10L * J;

  SeriesResult res;
  // Direct terms through the ratio; partial sums kept for the Levin check.
  LevinState levin;
  Real term(1), partial(0);
  std::vector<Real> saved_terms;
  saved_terms.reserve(N + 1);
  long k = 0;
  for (; k < N; ++k) {
    partial += term;
    if (k <= 40) levin.push(partial, term);
    saved_terms.push_back(term);
    if (term == 0) break;  // terminating series: the sum is exact
    term *= (k + 1) * (k + p3) / ((k + p4) * (k + p5));
  }
  res.evaluations = k + 1;
  if (term == 0 || terminating) {
    res.value = partial;
    res.error = Real(0);
    return res;
  }

  // Tail: T(N) = a_N h(N) with two anchor points for an error estimate.
  auto r = ratio_series(p3, p4, p5, J + 2);
  auto h = tail_coefficients(r, J);
  const long N2 = N - 4 * J;
  Real total1 = partial + term * eval_tail(h, Real(N));
  Real partial2(0);
  for (long j = 0; j < N2; ++j) partial2 += saved_terms[j];
  Real total2 = partial2 + saved_terms[N2] * eval_tail(h, Real(N2));
  Real tail_err = abs(total1 - total2) * 4 + abs(total1) * real_eps() * 8;

  auto [lev_val, lev_err] = levin.estimate(20);
  Real agree = abs(lev_val - total1);

  res.value = total1;
  res.error = tail_err;
  if (lev_err < tail_err && agree < 4 * lev_err) {
    res.value = lev_val;
    res.error = lev_err + agree;
  }
  if (res.error > tol * (abs(res.value) + 1))
    throw ToleranceNotMet("f32_at_1: requested tolerance not certified");
  return res;
}

}  // namespace hyperlog
