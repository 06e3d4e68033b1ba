#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hyperlog/precision.hpp"
#include "hyperlog/radical.hpp"

namespace hyperlog {

// scale * x^mu * N(x) / D(x) with rational coefficient polynomials. D is
// also carried as its exact (simple) root list for the closed-form route;
// D(x) = den_lead * prod_j (x - root_j).
struct PowerRational {
  Rational mu;
  RadicalMonomial scale = RadicalMonomial::one();
  std::vector<Rational> num = {Rational(1)};  // ascending
  std::vector<Rational> den = {Rational(1)};  // ascending
  std::vector<RadicalMonomial> roots;
  Rational den_lead = Rational(1);

  // smallest exponent of the numerator expansion: mu + ord(N)
  Rational min_exponent() const;
};

// scale * (x^a - x^b) / (1 - x); the pole at 1 is removable.
struct DigammaShape {
  Rational a, b;
  Rational scale = Rational(1);
};

struct IntegrandSpec {
  enum class Domain { UnitInterval, HalfLine };

  std::variant<PowerRational, DigammaShape> form;
  Domain domain = Domain::UnitInterval;

  // Throws PoleOnPath if a denominator root lies on the integration path.
  void validate_poles() const;

  Rational min_exponent() const;
  Real distance_to_origin_pole() const;  // +inf when there is no pole
};

// Evaluator bound to the current working precision.
class PreparedIntegrand {
 public:
  explicit PreparedIntegrand(const IntegrandSpec& spec);

  // x in (0,1) (or (0,inf) for half-line specs); omx = 1-x for unit-interval
  // nodes, used for stable evaluation near 1.
  Real operator()(const Real& x, const Real& omx) const;

  // rational part scale*N(z)/D(z) without the x^mu factor (contour use)
  Complex rational_part(const Complex& z) const;

  Real mu() const { return mu_; }

 private:
  Real mu_, scale_;
  Real dig_a_, dig_b_;
  bool digamma_ = false;
  std::vector<Real> num_, den_;
};

}  // namespace hyperlog
