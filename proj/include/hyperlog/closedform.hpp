#pragma once

#include <vector>

#include "hyperlog/integrand.hpp"
#include "hyperlog/logcomb.hpp"

namespace hyperlog {

// int_P(0,1) x^(n/m)/(c-x) dx/x as an exact log combination.
//
// For 0 < n <= m this is gamma^(n-m) * (-sum_i e(-ni/m) log(1 - e(i/m)/gamma))
// with gamma = c^(1/m) the principal root; the gamma^(n-m) prefactor corrects
// the formula as usually printed (residues at the roots of c - xi^m are
// -rho^(n-m), not -e(-ni/m) alone). Other n are reduced to this range through
// the exact recurrence Phi_(n+m) = c Phi_n - m/n, which matches the
// Pochhammer regularization of the integral.
LogCombination base_log_integral(long long n, long long m, const RadicalMonomial& c);

// int_0^1 (x^(n'/m) - x^(n/m))/(1-x) dx/x
//   = -sum_{i=1}^{m-1} (e(-n'i/m) - e(-ni/m)) log(1 - e(i/m))
//   = psi(n/m) - psi(n'/m).
LogCombination digamma_integral(long long n, long long nprime, long long m);

// psi(a) - psi(b) for positive rationals, reduced into (0,1] by
// psi(x+1) = psi(x) + 1/x before applying the Gauss sum.
LogCombination digamma_difference(const Rational& a, const Rational& b);

// int_P(0,1) x^alpha N(x) / prod_j (x - root_j) dx with simple roots off
// [0,1]. Partial fractions reduce every pole term to base_log_integral; a
// polynomial quotient integrates to rationals 1/(alpha+k+1). When the leading
// exponent dips to -1 or below the Pochhammer reading is used, which requires
// allow_regularized and alpha not an integer.
LogCombination closed_form_integral(const Rational& alpha,
                                    const std::vector<AlgExpr>& num,
                                    const std::vector<RadicalMonomial>& roots,
                                    bool allow_regularized = false);

// Exceptional-divisor contributions: algebraic coefficient times pi over an
// exact trig value of a rational angle, kept in AlgExpr via e(.) arithmetic.
enum class TrigKind {
  cos_2m,        // 4^a pi / cos(pi a)
  cos_2m_shift,  // 2^(2a-1) pi / cos(pi a - pi/2)
  sin_3m_g2,     // 3^(3a) pi / sin(pi a + pi/3)
  sin_3m_g3,     // 3^(3a) pi / sin(pi a + 2 pi/3)
  sin_4m_g2,     // 4^(3a-1) pi / (sqrt2 sin(pi a + pi/4))
  cos_4m_g3,     // 4^(3a-1) pi / (sqrt2 cos(pi a + pi/4))
};

const char* to_string(TrigKind k);

LogCombination trig_correction(TrigKind kind, const Rational& alpha);

// The (0,inf) integral each trig correction equals; quadrature oracle hook.
IntegrandSpec trig_defining_integrand(TrigKind kind, const Rational& alpha);

// cos(pi q) and sin(pi q) as exact algebraic expressions.
AlgExpr cos_pi(const Rational& q);
AlgExpr sin_pi(const Rational& q);

}  // namespace hyperlog
