#pragma once

#include <functional>

#include "hyperlog/integrand.hpp"
#include "hyperlog/precision.hpp"

namespace hyperlog {

struct QuadResult {
  Real value;
  Real error;
  long evaluations = 0;
};

using Fn01 = std::function<Real(const Real& x, const Real& omx)>;
using FnC = std::function<Complex(const Complex& z)>;

// Tanh-sinh (double-exponential) rule on (0,1). Integrands receive both the
// abscissa and its distance to 1 so endpoint-singular factors stay accurate.
// Levels are doubled until successive passes agree within tol.
QuadResult tanh_sinh_01(const Fn01& f, const Real& tol, int max_level = 11);

// (0,inf), split at 1 with v -> 1/v on the tail.
QuadResult tanh_sinh_0inf(const Fn01& f, const Real& tol, int max_level = 11);

QuadResult quad_1d(const IntegrandSpec& spec, const Real& tol);

// Pochhammer-regularized int_P(0,1) x^alpha f(x) dx: the [eps,1] piece by
// tanh-sinh plus the weighted circle at radius eps (Gauss-Legendre in the
// angular parameter; the branch of x^alpha on the circle is arg = 2 pi a t).
// f must be analytic on a neighborhood of [0,1]; the result is independent
// of eps as long as 0 < eps < distance to the nearest pole of f.
QuadResult poch_contour(const Real& alpha, const Fn01& f_real, const FnC& f_complex,
                        const Real& eps, const Real& tol);

QuadResult poch_contour(const Real& alpha, const IntegrandSpec& spec,
                        const Real& eps, const Real& tol);

// int over the triangle Gamma_1 = {0<=xi,eta<=1, xi+eta>=1} of
// (xi+eta-1)^(a1-1) xi^(a2-1) eta^(a3-1), transformed to the unit square as
// int int (1-s)^(a1+a2-1) (1-t)^(a1+a3-1) (1-st)^(-a1-a2-a3) ds dt
// and evaluated by a product tanh-sinh rule with an s<->t symmetry fold.
QuadResult gamma1_double(const Real& a1, const Real& a2, const Real& a3,
                         const Real& tol, int max_level = 8);

}  // namespace hyperlog
