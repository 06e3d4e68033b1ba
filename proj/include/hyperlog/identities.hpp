#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperlog/closedform.hpp"
#include "hyperlog/quadrature.hpp"
#include "hyperlog/series.hpp"

namespace hyperlog::identities {

// Linear form c0 + ca*alpha + cb*beta over the identity parameters.
struct Lin {
  Rational c0{0}, ca{0}, cb{0};
  Rational at(const Rational& a, const Rational& b = Rational(0)) const {
    return c0 + ca * a + cb * b;
  }
};

inline Lin lin(Rational c0, Rational ca = Rational(0), Rational cb = Rational(0)) {
  return Lin{c0, ca, cb};
}

// One regularized boundary integral: sign * int_P x^mu num(x)/den(x) dx,
// with den(x) = den_lead * prod_j (x - root_j).
struct BoundaryIntegral {
  Rational sign;
  Lin mu;
  std::vector<Rational> num;
  std::vector<Rational> den;
  std::vector<RadicalMonomial> roots;
  Rational den_lead{1};
};

enum class Chain { Gamma1, Gamma2, Gamma3 };

struct Identity {
  std::string id;
  bool has_beta = false;
  bool stokes_form = false;  // verified as 2D-vs-1D (pre-continuation shape)
  bool is_p14 = false;

  // hypergeometric side: (pref_num / prod pref_den) * F(1,1,f3; f4,f5; 1)
  Lin pref_num;
  std::vector<Lin> pref_den;
  Lin f3, f4, f5;

  // boundary side
  std::vector<BoundaryIntegral> boundary;
  bool digamma_boundary = false;  // EX0 integrand eta^-a (1-eta^b)/(b(1-eta))
  std::optional<TrigKind> trig;
  Rational trig_sign{1};

  // Gamma_1 double-integral middle line: scale2d * I(g1, g2, g3)
  Lin scale2d;
  Lin g1, g2, g3;

  // Table-1 box in alpha (open interval), beta handled per family
  std::optional<Rational> alpha_lo, alpha_hi;
  Lin nonintegral;  // continuation requires nonintegral(alpha) not in Z

  // +1: as printed; -1: the printed boundary side has the opposite sign
  // (fixed once by a series-vs-quadrature oracle run, see orientation_note)
  int orientation = 1;
  std::string orientation_note;

  std::string statement;
  std::string citation;
};

const std::vector<Identity>& registry();
const Identity& lookup(const std::string& id);  // throws UnknownIdentity

struct Params {
  Rational alpha;
  std::optional<Rational> beta;
  std::optional<Rational> gamma;  // P14 only (third exponent)
};

struct RouteStatus {
  bool computed = false;
  Real value;
  Real error;
  long evaluations = 0;
  std::string note;
};

struct Validity {
  bool in_box = false;       // Table-1 parameter box
  bool route_a = false;      // series margin and lower parameters admit A
  bool route_b = false;      // every boundary integral ordinary or regularizable
  bool route_b_needs_poch = false;
  bool route_c = false;
  bool route_d = false;      // 2D convergence conditions
  bool continuation_ok = true;  // the theorem's non-integrality clause
  std::string reason;
  bool ok() const { return route_a || route_b || route_c || route_d; }
};

Validity validity(const std::string& id, const Params& p);

struct VerificationRecord {
  std::string id;
  Params params;
  unsigned precision = 30;
  Real tolerance;
  int orientation = 1;
  std::string orientation_note;
  RouteStatus series_a, boundary_b, closed_c, double_d;
  // pairwise relative residuals (label pairs like "A-B")
  std::vector<std::pair<std::string, Real>> residuals;
  bool pass = false;
  bool has_closed_form = false;
  LogCombination closed_form;
};

VerificationRecord verify(const std::string& id, const Params& p,
                          unsigned precision, const Real& tolerance,
                          bool with_2d = true);

// Exact log-combination for the F value itself (route C divided by the
// rational prefactor).
LogCombination closed_form(const std::string& id, const Params& p);

struct Reduction {
  Chain chain;                      // always Gamma1 after reduction
  std::array<Rational, 3> triple;
  AlgExpr phase;
};

// Gamma_2 -> ((a3,a1,a2), (-1)^(a1+a3)); Gamma_3 -> ((a2,a3,a1), (-1)^(a1+a2)).
Reduction permutation_reduction(Chain region, const std::array<Rational, 3>& triple);

// Seeded, reproducible parameter sampling inside the validity box with
// denominators capped at 60; only points admitting routes A, B and C.
std::vector<Params> sample_params(const std::string& id, int count, unsigned long seed);

}  // namespace hyperlog::identities
