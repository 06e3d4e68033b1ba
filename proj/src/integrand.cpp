#include "hyperlog/integrand.hpp"

#include <limits>

#include "hyperlog/errors.hpp"

namespace hyperlog {

Rational PowerRational::min_exponent() const {
  size_t ord = 0;
  while (ord < num.size() && num[ord] == Rational(0)) ++ord;
  if (ord == num.size()) return Rational(0);  // zero numerator
  return mu + Rational(static_cast<long long>(ord));
}

void IntegrandSpec::validate_poles() const {
  const auto* pr = std::get_if<PowerRational>(&form);
  if (!pr) return;  // the digamma pole at 1 is removable
  for (const auto& root : pr->roots) {
    Ball b = root.eval();
    if (abs(b.mid.im) > b.rad + real_eps()) continue;
    Real re = b.mid.re;
    bool on_path = domain == Domain::UnitInterval ? (re >= -b.rad && re <= 1 + b.rad)
                                                  : (re >= -b.rad);
    if (on_path) throw PoleOnPath("denominator root on the integration path");
  }
}

Rational IntegrandSpec::min_exponent() const {
  if (const auto* pr = std::get_if<PowerRational>(&form)) return pr->min_exponent();
  const auto& d = std::get<DigammaShape>(form);
  return (std::min)(d.a, d.b);
}

Real IntegrandSpec::distance_to_origin_pole() const {
  const auto* pr = std::get_if<PowerRational>(&form);
  Real best = Real(std::numeric_limits<double>::infinity());
  if (!pr) return Real(1);  // digamma shape: pole at 1
  for (const auto& root : pr->roots) best = (std::min)(best, abs(root.eval().mid));
  return best;
}

PreparedIntegrand::PreparedIntegrand(const IntegrandSpec& spec) {
  if (const auto* pr = std::get_if<PowerRational>(&spec.form)) {
    mu_ = to_real(pr->mu);
    Ball s = pr->scale.eval();
    scale_ = s.mid.re;
    for (const auto& c : pr->num) num_.push_back(to_real(c));
    for (const auto& c : pr->den) den_.push_back(to_real(c));
  } else {
    const auto& d = std::get<DigammaShape>(spec.form);
    digamma_ = true;
    mu_ = Real(0);
    scale_ = to_real(d.scale);
    dig_a_ = to_real(d.a);
    dig_b_ = to_real(d.b);
  }
}

namespace {

Real horner(const std::vector<Real>& c, const Real& x) {
  Real acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Complex horner(const std::vector<Real>& c, const Complex& z) {
  Complex acc;
  for (size_t i = c.size(); i-- > 0;) acc = acc * z + Complex(c[i]);
  return acc;
}

}  // namespace

Real PreparedIntegrand::operator()(const Real& x, const Real& omx) const {
  if (digamma_) {
    // (x^a - x^b)/(1-x) = x^b expm1((a-b) log x) / (1-x), stable near 1
    Real lx = x < Real(1) / 2 ? log(x) : log1p(-omx);
    Real v = pow(x, dig_b_) * expm1((dig_a_ - dig_b_) * lx) / omx;
    return scale_ * v;
  }
  Real v = scale_ * pow(x, mu_) * horner(num_, x);
  return v / horner(den_, x);
}

Complex PreparedIntegrand::rational_part(const Complex& z) const {
  if (digamma_) throw Error("digamma shape has no contour form");
  return Complex(scale_) * horner(num_, z) / horner(den_, z);
}

}  // namespace hyperlog
