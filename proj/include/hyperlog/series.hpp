#pragma once

#include "hyperlog/precision.hpp"

namespace hyperlog {

struct SeriesResult {
  Real value;
  Real error;
  long evaluations = 0;
};

// Rising factorial (p)_k.
Real pochhammer(const Real& p, unsigned long k);

// F(1,1,p3; p4,p5; 1) = sum_k (1)_k (1)_k (p3)_k / ((p4)_k (p5)_k k!).
//
// The series converges iff the margin s = p4+p5-p3-2 is positive (terms decay
// like k^-(1+s)). Direct partial sums are accelerated two ways:
//   - a Levin-u transform (order-capped) on the first partial sums, and
//   - a tail estimate a_N * h(N), where h solves h(N) = 1 + r(N) h(N+1)
//     order by order in 1/N from the term ratio
//     r(N) = (N+1)(N+p3)/((N+p4)(N+p5)).
// The two routes cross-check each other; the reported error covers their
// disagreement. Throws Divergent when s <= 0 or a lower parameter is a
// non-positive integer, ToleranceNotMet when tol cannot be certified.
SeriesResult f32_at_1(const Real& p3, const Real& p4, const Real& p5, const Real& tol);

}  // namespace hyperlog
