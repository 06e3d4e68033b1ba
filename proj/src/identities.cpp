#include "hyperlog/identities.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "hyperlog/errors.hpp"

namespace hyperlog::identities {

namespace {

RadicalMonomial rad_rat(long long n, long long d = 1) {
  return RadicalMonomial::from_rational(Rational(n, d));
}

// roots of x^k = r * e(turns): |r|^(1/k) e((turns + j)/k)
std::vector<RadicalMonomial> binomial_roots(int k, const RadicalMonomial& base) {
  std::vector<RadicalMonomial> out;
  for (int j = 0; j < k; ++j)
    out.push_back((base * RadicalMonomial::e(Rational(j, 1))).pow(Rational(1, k)));
  return out;
}

std::vector<RadicalMonomial> roots_of_unity_scaled(int k, const Rational& offset_turns,
                                                   const RadicalMonomial& scale) {
  // scale * e((offset + j)/k), j = 0..k-1
  std::vector<RadicalMonomial> out;
  for (int j = 0; j < k; ++j)
    out.push_back(scale * RadicalMonomial::e((offset_turns + j) / k));
  return out;
}

std::vector<Rational> coeffs(std::initializer_list<long long> c) {
  std::vector<Rational> out;
  for (long long v : c) out.push_back(Rational(v));
  return out;
}

std::vector<Rational> monomial_den(int degree, long long c0, long long clead) {
  std::vector<Rational> out(degree + 1, Rational(0));
  out[0] = Rational(c0);
  out[degree] = Rational(clead);
  return out;
}

std::vector<Identity> build_registry() {
  std::vector<Identity> reg;

  const auto r_half = Rational(1, 2);
  const RadicalMonomial sqrt3 = RadicalMonomial::prime_power(3, r_half);
  const RadicalMonomial inv_sqrt3 = RadicalMonomial::prime_power(3, -r_half);
  const RadicalMonomial sqrt2 = RadicalMonomial::prime_power(2, r_half);
  const RadicalMonomial r34 = RadicalMonomial::prime_power(2, Rational(-3, 4));
  const RadicalMonomial inv_sqrt2 = RadicalMonomial::prime_power(2, -r_half);

  // roots of 27 + x^6 (sqrt3 e((2k+1)/12)) and 1 + 27 x^6
  auto roots_27_x6 = roots_of_unity_scaled(6, Rational(1, 2), sqrt3);
  auto roots_1_27x6 = roots_of_unity_scaled(6, Rational(1, 2), inv_sqrt3);
  // roots of 64 - y^12 (sqrt2 e(k/12)), 64 + x^12, 64 x^8 + 1
  auto roots_64m = roots_of_unity_scaled(12, Rational(0), sqrt2);
  auto roots_64p = roots_of_unity_scaled(12, Rational(1, 2), sqrt2);
  auto roots_64x8 = roots_of_unity_scaled(8, Rational(1, 2), r34);
  // roots of 2x^2 - 2x + 1: (1 +- i)/2
  std::vector<RadicalMonomial> roots_2x2 = {
      inv_sqrt2 * RadicalMonomial::e(Rational(1, 8)),
      inv_sqrt2 * RadicalMonomial::e(Rational(-1, 8))};
  std::vector<RadicalMonomial> root_minus1 = {RadicalMonomial::e(r_half)};
  std::vector<RadicalMonomial> root_two = {rad_rat(2)};

  // ---- EX0 -----------------------------------------------------------
  {
    Identity I;
    I.id = "EX0";
    I.has_beta = true;
    I.pref_num = lin(1);
    I.pref_den = {lin(1, -1, 1)};  // 1 - a + b
    I.f3 = lin(1, 0, 1);
    I.f4 = lin(2);
    I.f5 = lin(2, -1, 1);
    I.digamma_boundary = true;
    I.scale2d = lin(1);
    I.g1 = lin(1, -1);  // 1 - a
    I.g2 = lin(0, 1);
    I.g3 = lin(0, 0, 1);
    I.alpha_lo = Rational(0);
    I.alpha_hi = Rational(1);
    I.nonintegral = lin(0, 1);
    I.statement =
        "1/(1-a+b) * F(1,1,1+b; 2,2-a+b; 1) = int_P(0,1) x^-a (1-x^b)/(b(1-x)) dx";
    I.citation = "Gamma_1 period of the (a,1-a,b,1-b) eigenspace; Gauss digamma reduction";
    reg.push_back(I);
  }

  // ---- G1-m / S1-m ----------------------------------------------------
  auto make_x1 = [&](bool stokes) {
    Identity I;
    I.id = stokes ? "S1-m" : "G1-m";
    I.has_beta = true;
    I.stokes_form = stokes;
    I.pref_num = lin(0, 1);
    I.pref_den = {lin(1, -1, 1), lin(1, 1, 1)};
    I.f3 = lin(1, 0, 1);
    I.f4 = lin(2, -1, 1);
    I.f5 = lin(2, 1, 1);
    BoundaryIntegral t1{Rational(1), lin(0, -1, 1), coeffs({1}), coeffs({1, 1}),
                        root_minus1, Rational(1)};
    BoundaryIntegral t2{Rational(-1), lin(0, 1, 1), coeffs({1}), coeffs({1, 1}),
                        root_minus1, Rational(1)};
    I.boundary = {t1, t2};
    I.scale2d = lin(0, 1);
    I.g1 = lin(1, 0, 1);
    I.g2 = lin(0, -1);
    I.g3 = lin(0, 1);
    I.nonintegral = lin(0, 1);
    I.statement =
        "a/((b-a+1)(b+a+1)) * F(1,1,b+1; b-a+2,b+a+2; 1) = "
        "int_P (x^(b-a) - x^(b+a))/(1+x) dx";
    I.citation = "Gamma_1 boundary reduction, p=1 surface";
    return I;
  };
  reg.push_back(make_x1(false));

  // ---- G1-2m / S1-2m --------------------------------------------------
  auto make_x2 = [&](bool stokes) {
    Identity I;
    I.id = stokes ? "S1-2m" : "G1-2m";
    I.stokes_form = stokes;
    I.pref_num = lin(1);
    I.pref_den = {lin(r_half, 1)};
    I.f3 = lin(r_half);
    I.f4 = lin(1, 1);
    I.f5 = lin(Rational(3, 2), 1);
    BoundaryIntegral t{Rational(2), lin(-1, 2), coeffs({1}), coeffs({2, -1}),
                       root_two, Rational(-1)};
    I.boundary = {t};
    I.scale2d = lin(0, 1);
    I.g1 = lin(0, 2);
    I.g2 = lin(0, -1);
    I.g3 = lin(r_half, -1);
    I.alpha_lo = Rational(0);
    I.nonintegral = lin(0, 2);
    I.statement =
        "1/(a+1/2) * F(1,1,1/2; a+1,a+3/2; 1) = 2 int_P x^(2a-1)/(2-x) dx";
    I.citation = "Gamma_1 boundary reduction, p=2 surface";
    return I;
  };
  reg.push_back(make_x2(false));

  // ---- G1-3m / S1-3m --------------------------------------------------
  auto make_x3 = [&](bool stokes) {
    Identity I;
    I.id = stokes ? "S1-3m" : "G1-3m";
    I.stokes_form = stokes;
    Rational outer = stokes ? Rational(3) : Rational(1);
    I.pref_num = lin(0, 1);
    if (stokes)
      I.pref_den = {lin(Rational(1, 3), 2), lin(Rational(2, 3), 2)};
    else
      I.pref_den = {lin(1, 6), lin(Rational(2, 3), 2)};
    I.f3 = lin(1, 1);
    I.f4 = lin(Rational(4, 3), 2);
    I.f5 = lin(Rational(5, 3), 2);
    BoundaryIntegral t1{outer, lin(1, 6), coeffs({3, 0, 0, 1}),
                        monomial_den(6, 27, 1), roots_27_x6, Rational(1)};
    BoundaryIntegral t2{outer, lin(0, 6), coeffs({9, 0, 0, 1}),
                        monomial_den(6, 27, 1), roots_27_x6, Rational(1)};
    I.boundary = {t1, t2};
    I.scale2d = stokes ? lin(0, 1) : lin(0, Rational(1, 3));
    I.g1 = lin(0, 3);
    I.g2 = lin(Rational(1, 3), -1);
    I.g3 = lin(Rational(2, 3), -1);
    I.alpha_lo = Rational(0);
    I.nonintegral = lin(0, 3);
    I.statement =
        "a/((6a+1)(2a+2/3)) * F(1,1,a+1; 2a+4/3,2a+5/3; 1) = "
        "int_P y^(6a+1)(3+y^3)/(27+y^6) dy + int_P x^(6a)(9+x^3)/(27+x^6) dx";
    I.citation = "Gamma_1 boundary reduction, p=3 surface";
    return I;
  };
  reg.push_back(make_x3(false));

  // ---- G1-4m / S1-4m --------------------------------------------------
  {
    Identity I;
    I.id = "G1-4m";
    I.pref_num = lin(0, 4);
    I.pref_den = {lin(1, 12), lin(Rational(3, 4), 3)};
    I.f3 = lin(1, 2);
    I.f4 = lin(Rational(5, 4), 3);
    I.f5 = lin(Rational(7, 4), 3);
    BoundaryIntegral t1{Rational(1), lin(2, 12), coeffs({16, 0, 0, 0, -8, 0, 0, 0, -2}),
                        monomial_den(12, 64, -1), roots_64m, Rational(-1)};
    BoundaryIntegral t2{Rational(1), lin(0, 12), coeffs({64, 0, 0, 0, 16, 0, 0, 0, -2}),
                        monomial_den(12, 64, -1), roots_64m, Rational(-1)};
    I.boundary = {t1, t2};
    I.scale2d = lin(0, 1);
    I.g1 = lin(0, 4);
    I.g2 = lin(Rational(1, 4), -1);
    I.g3 = lin(Rational(3, 4), -1);
    I.alpha_lo = Rational(0);
    I.nonintegral = lin(0, 4);
    I.statement =
        "4a/((12a+1)(3a+3/4)) * F(1,1,2a+1; 3a+5/4,3a+7/4; 1) = "
        "int_P y^(12a) 2y^2(8-4y^4-y^8)/(64-y^12) dy + "
        "int_P x^(12a) 2(8x^4+32-x^8)/(64-x^12) dx";
    I.citation = "Gamma_1 boundary reduction, p=4 surface";
    reg.push_back(I);
  }

  // ---- Stokes forms (pre-continuation, verified 2D vs 1D) -------------
  reg.push_back(make_x1(true));
  reg.push_back(make_x2(true));
  reg.push_back(make_x3(true));
  {
    Identity I;
    I.id = "S1-4m";
    I.stokes_form = true;
    I.pref_num = lin(0, 4);
    I.pref_den = {lin(1, 12), lin(Rational(3, 4), 3)};
    I.f3 = lin(1, 2);
    I.f4 = lin(Rational(5, 4), 3);
    I.f5 = lin(Rational(7, 4), 3);
    // numerators as printed: 2y^2(-8+4y^4+y^8), 2(-8x^4-32+x^8)
    BoundaryIntegral t1{Rational(2), lin(2, 12), coeffs({-8, 0, 0, 0, 4, 0, 0, 0, 1}),
                        monomial_den(12, 64, -1), roots_64m, Rational(-1)};
    BoundaryIntegral t2{Rational(2), lin(0, 12), coeffs({-32, 0, 0, 0, -8, 0, 0, 0, 1}),
                        monomial_den(12, 64, -1), roots_64m, Rational(-1)};
    I.boundary = {t1, t2};
    I.scale2d = lin(0, 1);
    I.g1 = lin(0, 4);
    I.g2 = lin(Rational(1, 4), -1);
    I.g3 = lin(Rational(3, 4), -1);
    I.alpha_lo = Rational(0);
    I.nonintegral = lin(0, 4);
    I.orientation = -1;
    I.orientation_note =
        "right side as printed is the negative of the left (the continuation "
        "form of the same equality carries the corrected numerators)";
    I.statement =
        "a int_G1 (xi+eta-1)^(4a-1) xi^(-a-3/4) eta^(-a-1/4) = "
        "2 int y^(12a) y^2(-8+4y^4+y^8)/(64-y^12) + 2 int x^(12a)(-8x^4-32+x^8)/(64-x^12)";
    I.citation = "Stokes equality on the blown-up p=4 surface, Gamma_1 chain";
    reg.push_back(I);
  }

  // ---- G2-2m-a --------------------------------------------------------
  {
    Identity I;
    I.id = "G2-2m-a";
    I.pref_num = lin(0, 1);
    I.pref_den = {lin(r_half, 1), lin(r_half, -2)};
    I.f3 = lin(r_half);
    I.f4 = lin(Rational(3, 2), 1);
    I.f5 = lin(Rational(3, 2), -2);
    BoundaryIntegral t{Rational(1), lin(0, -4), coeffs({2}), coeffs({1, -2, 2}),
                       roots_2x2, Rational(2)};
    I.boundary = {t};
    I.trig = TrigKind::cos_2m;
    I.trig_sign = Rational(-1);
    I.orientation_note =
        "divisor term printed as +4^a pi/cos(pi a); series-vs-quadrature run "
        "fixes its sign to minus";
    I.scale2d = lin(0, 1);
    I.g1 = lin(r_half, -1);
    I.g2 = lin(0, 2);
    I.g3 = lin(0, -1);
    I.alpha_lo = Rational(0);
    I.alpha_hi = Rational(1, 4);
    I.nonintegral = lin(0, 2);
    I.statement =
        "a/((a+1/2)(1/2-2a)) * F(1,1,1/2; a+3/2,3/2-2a; 1) = "
        "int_P 2x^(-4a)/(2x^2-2x+1) dx - 4^a pi/cos(pi a)  [sign fixed by oracle]";
    I.citation = "Gamma_2 boundary reduction, p=2 surface, with the E_2 divisor term";
    reg.push_back(I);
  }

  // ---- G2-2m-b --------------------------------------------------------
  {
    Identity I;
    I.id = "G2-2m-b";
    I.pref_num = lin(-r_half, 1);
    I.pref_den = {lin(Rational(3, 2), -2), lin(0, 1)};
    I.f3 = lin(r_half);
    I.f4 = lin(1, 1);
    I.f5 = lin(Rational(5, 2), -2);
    BoundaryIntegral t{Rational(1), lin(2, -4), coeffs({2}), coeffs({1, -2, 2}),
                       roots_2x2, Rational(2)};
    I.boundary = {t};
    I.trig = TrigKind::cos_2m_shift;
    I.trig_sign = Rational(-1);
    I.orientation_note =
        "divisor term sign corrected to minus, consistent with the a -> a-1/2 "
        "shift of the previous identity";
    I.scale2d = lin(-r_half, 1);
    I.g1 = lin(1, -1);
    I.g2 = lin(-1, 2);
    I.g3 = lin(r_half, -1);
    I.alpha_lo = Rational(1, 2);
    I.alpha_hi = Rational(3, 4);
    I.nonintegral = lin(0, 2);
    I.statement =
        "(a-1/2)/((3/2-2a)a) * F(1,1,1/2; a+1,5/2-2a; 1) = "
        "int_P 2x^(2-4a)/(2x^2-2x+1) dx - 2^(2a-1) pi/cos(pi a - pi/2)  [sign fixed by oracle]";
    I.citation = "Gamma_2 reduction, p=2 surface, shifted by a -> a-1/2";
    reg.push_back(I);
  }

  // ---- G2-3m ----------------------------------------------------------
  {
    Identity I;
    I.id = "G2-3m";
    I.pref_num = lin(0, 3);
    I.pref_den = {lin(Rational(2, 3), 2), lin(1, -2)};
    I.f3 = lin(1, 1);
    I.f4 = lin(Rational(5, 3), 2);
    I.f5 = lin(2, -2);
    BoundaryIntegral t1{Rational(1), lin(2, -6), coeffs({27, 0, 0, 81}),
                        monomial_den(6, 1, 27), roots_1_27x6, Rational(27)};
    BoundaryIntegral t2{Rational(-1), lin(1, 6), coeffs({27, 0, 0, -9}),
                        monomial_den(6, 27, 1), roots_27_x6, Rational(1)};
    I.boundary = {t1, t2};
    I.trig = TrigKind::sin_3m_g2;
    I.trig_sign = Rational(-1);
    I.scale2d = lin(0, 3);
    I.g1 = lin(Rational(2, 3), -1);
    I.g2 = lin(0, 3);
    I.g3 = lin(Rational(1, 3), -1);
    I.alpha_lo = Rational(-1, 3);
    I.alpha_hi = Rational(1, 2);
    I.nonintegral = lin(0, 3);
    I.statement =
        "3a/((2a+2/3)(1-2a)) * F(1,1,a+1; 2a+5/3,2-2a; 1) = "
        "int_P 27x^(2-6a)(3x^3+1)/(1+27x^6) dx - int_P 9x^(6a+1)(3-x^3)/(27+x^6) dx"
        " - 3^(3a) pi/sin(pi a + pi/3)";
    I.citation = "Gamma_2 boundary reduction, p=3 surface, with the E_2 divisor term";
    reg.push_back(I);
  }

  // ---- G2-4m ----------------------------------------------------------
  {
    Identity I;
    I.id = "G2-4m";
    I.pref_num = lin(0, -1);
    I.pref_den = {lin(Rational(3, 4), 3), lin(1, -2)};
    I.f3 = lin(1, 2);
    I.f4 = lin(Rational(7, 4), 3);
    I.f5 = lin(2, -2);
    BoundaryIntegral t1{Rational(-1), lin(3, -8), coeffs({8, 0, 0, 0, 64}),
                        monomial_den(8, 1, 64), roots_64x8, Rational(64)};
    BoundaryIntegral t2{Rational(-1), lin(2, 12), coeffs({-16, 0, 0, 0, -8, 0, 0, 0, 2}),
                        monomial_den(12, 64, 1), roots_64p, Rational(1)};
    I.boundary = {t1, t2};
    I.trig = TrigKind::sin_4m_g2;
    I.trig_sign = Rational(1);
    I.scale2d = lin(0, -1);
    I.g1 = lin(Rational(3, 4), -1);
    I.g2 = lin(0, 4);
    I.g3 = lin(Rational(1, 4), -1);
    I.alpha_lo = Rational(-1, 4);
    I.alpha_hi = Rational(1, 2);
    I.nonintegral = lin(0, 4);
    I.statement =
        "-a/((3a+3/4)(1-2a)) * F(1,1,2a+1; 3a+7/4,2-2a; 1) = "
        "-int_P 8x^(3-8a)(1+8x^4)/(64x^8+1) dx - int_P 2x^(12a+2)(-8-4x^4+x^8)/(64+x^12) dx"
        " + 4^(3a-1) pi/(sqrt2 sin(pi a + pi/4))";
    I.citation = "Gamma_2 boundary reduction, p=4 surface, with the E_2 divisor term";
    reg.push_back(I);
  }

  // ---- G3-3m ----------------------------------------------------------
  {
    Identity I;
    I.id = "G3-3m";
    I.pref_num = lin(0, 3);
    I.pref_den = {lin(1, -2), lin(Rational(1, 3), 2)};
    I.f3 = lin(1, 1);
    I.f4 = lin(2, -2);
    I.f5 = lin(Rational(4, 3), 2);
    BoundaryIntegral t1{Rational(-1), lin(2, -6), coeffs({27, 0, 0, -81}),
                        monomial_den(6, 1, 27), roots_1_27x6, Rational(27)};
    BoundaryIntegral t2{Rational(-1), lin(0, 6), coeffs({81, 0, 0, -9}),
                        monomial_den(6, 27, 1), roots_27_x6, Rational(1)};
    I.boundary = {t1, t2};
    I.trig = TrigKind::sin_3m_g3;
    I.trig_sign = Rational(1);
    I.scale2d = lin(0, 3);
    I.g1 = lin(Rational(1, 3), -1);
    I.g2 = lin(Rational(2, 3), -1);
    I.g3 = lin(0, 3);
    I.alpha_lo = Rational(-1, 6);
    I.alpha_hi = Rational(1, 3);
    I.nonintegral = lin(0, 3);
    I.statement =
        "3a/((1-2a)(2a+1/3)) * F(1,1,a+1; 2-2a,2a+4/3; 1) = "
        "-int_P 27y^(2-6a)(1-3y^3)/(1+27y^6) dy - int_P 9y^(6a)(9-y^3)/(27+y^6) dy"
        " + 3^(3a) pi/sin(pi a + 2pi/3)";
    I.citation = "Gamma_3 boundary reduction, p=3 surface, with the E_3 divisor term";
    reg.push_back(I);
  }

  // ---- G3-4m ----------------------------------------------------------
  {
    Identity I;
    I.id = "G3-4m";
    I.pref_num = lin(0, -1);
    I.pref_den = {lin(1, -2), lin(Rational(1, 4), 3)};
    I.f3 = lin(1, 2);
    I.f4 = lin(2, -2);
    I.f5 = lin(Rational(5, 4), 3);
    BoundaryIntegral t1{Rational(1), lin(3, -8), coeffs({8, 0, 0, 0, -64}),
                        monomial_den(8, 1, 64), roots_64x8, Rational(64)};
    BoundaryIntegral t2{Rational(-1), lin(0, 12), coeffs({-64, 0, 0, 0, 16, 0, 0, 0, 2}),
                        monomial_den(12, 64, 1), roots_64p, Rational(1)};
    I.boundary = {t1, t2};
    I.trig = TrigKind::cos_4m_g3;
    I.trig_sign = Rational(-1);
    I.scale2d = lin(0, -1);
    I.g1 = lin(Rational(1, 4), -1);
    I.g2 = lin(Rational(3, 4), -1);
    I.g3 = lin(0, 4);
    I.alpha_lo = Rational(-1, 12);
    I.alpha_hi = Rational(1, 4);
    I.nonintegral = lin(0, 4);
    I.statement =
        "-a/((1-2a)(3a+1/4)) * F(1,1,2a+1; 2-2a,3a+5/4; 1) = "
        "int_P 8y^(3-8a)(1-8y^4)/(64y^8+1) dy - int_P 2y^(12a)(8y^4-32+y^8)/(64+y^12) dy"
        " - 4^(3a-1) pi/(sqrt2 cos(pi a + pi/4))";
    I.citation = "Gamma_3 boundary reduction, p=4 surface, with the E_3 divisor term";
    reg.push_back(I);
  }

  // ---- P14 ------------------------------------------------------------
  {
    Identity I;
    I.id = "P14";
    I.is_p14 = true;
    I.statement =
        "int_G1 (xi+eta-1)^(a1-1) xi^(a2-1) eta^(a3-1) = "
        "F(1,1,a1+a2+a3; a1+a2+1,a1+a3+1; 1)/((a1+a2)(a1+a3))";
    I.citation = "Gamma_1 period as a 3F2 value via (xi,eta) -> (s,t)";
    reg.push_back(I);
  }

  return reg;
}

}  // namespace

const std::vector<Identity>& registry() {
  static const std::vector<Identity> reg = build_registry();
  return reg;
}

const Identity& lookup(const std::string& id) {
  for (const auto& I : registry())
    if (I.id == id) return I;
  throw UnknownIdentity("no identity named " + id);
}

Reduction permutation_reduction(Chain region, const std::array<Rational, 3>& t) {
  switch (region) {
    case Chain::Gamma1:
      return {Chain::Gamma1, t, AlgExpr(Rational(1))};
    case Chain::Gamma2:
      return {Chain::Gamma1, {t[2], t[0], t[1]}, AlgExpr::e((t[0] + t[2]) / 2)};
    case Chain::Gamma3:
      return {Chain::Gamma1, {t[1], t[2], t[0]}, AlgExpr::e((t[0] + t[1]) / 2)};
  }
  throw Error("unreachable");
}

namespace {

Rational margin_of(const Identity& I, const Rational& a, const Rational& b) {
  return I.f4.at(a, b) + I.f5.at(a, b) - I.f3.at(a, b) - 2;
}

Rational prefactor(const Identity& I, const Rational& a, const Rational& b) {
  Rational num = I.pref_num.at(a, b);
  for (const auto& d : I.pref_den) num /= d.at(a, b);
  return num;
}

bool trig_pole_free(const Identity& I, const Rational& a) {
  if (!I.trig) return true;
  try {
    trig_correction(*I.trig, a);
    return true;
  } catch (const TrigPole&) {
    return false;
  }
}

IntegrandSpec boundary_spec(const BoundaryIntegral& bi, const Rational& a,
                            const Rational& b) {
  PowerRational pr;
  pr.mu = bi.mu.at(a, b);
  pr.num = bi.num;
  pr.den = bi.den;
  pr.roots = bi.roots;
  pr.den_lead = bi.den_lead;
  IntegrandSpec spec;
  spec.form = pr;
  return spec;
}

IntegrandSpec ex0_spec(const Rational& a, const Rational& b) {
  DigammaShape d;
  d.a = -a;
  d.b = b - a;
  d.scale = Rational(1) / b;
  IntegrandSpec spec;
  spec.form = d;
  return spec;
}

unsigned digits_for(const Real& tol, unsigned base) {
  long need = static_cast<long>(std::ceil(-static_cast<double>(log10(tol)))) + 10;
  return (std::max)(static_cast<unsigned>((std::max)(need, 20L)), base);
}

}  // namespace

Validity validity(const std::string& id, const Params& p) {
  const Identity& I = lookup(id);
  Validity v;
  const Rational a = p.alpha;
  const Rational b = p.beta.value_or(Rational(0));

  if (I.is_p14) {
    if (!p.beta || !p.gamma) {
      v.reason = "P14 requires three exponents (alpha, beta, gamma)";
      return v;
    }
    Rational a1 = p.alpha, a2 = *p.beta, a3 = *p.gamma;
    v.route_d = a1 > Rational(0) && a1 + a2 > Rational(0) && a1 + a3 > Rational(0);
    v.in_box = v.route_d;
    v.route_a = v.route_d && a1 + a2 + a3 > Rational(0);
    if (!v.route_d) v.reason = "requires a1 > 0, a1+a2 > 0, a1+a3 > 0";
    return v;
  }
  if (I.has_beta && !p.beta) {
    v.reason = "identity takes a second parameter beta";
    return v;
  }

  // Table-1 box
  v.in_box = true;
  if (I.alpha_lo && !(a > *I.alpha_lo)) v.in_box = false;
  if (I.alpha_hi && !(a < *I.alpha_hi)) v.in_box = false;
  if (I.id == "EX0") {
    if (!(b > Rational(0) && b < Rational(1))) v.in_box = false;
  } else if (I.has_beta) {
    // X_m row: -1+|a| < b
    Rational abs_a = a < Rational(0) ? -a : a;
    if (!(b > abs_a - 1)) v.in_box = false;
  }

  // route A: positive margin, positive lower parameters, finite prefactor
  Rational marg = margin_of(I, a, b);
  bool pref_ok = I.pref_num.at(a, b) != Rational(0);
  for (const auto& d : I.pref_den)
    if (d.at(a, b) == Rational(0)) pref_ok = false;
  v.route_a = marg > Rational(0) && I.f4.at(a, b) > Rational(0) &&
              I.f5.at(a, b) > Rational(0) && pref_ok;

  // routes B and C per boundary term
  bool b_ok = true, c_ok = true, needs_poch = false;
  if (I.digamma_boundary) {
    b_ok = c_ok = a < Rational(1) && a > Rational(0) && b > Rational(0) && b < Rational(1);
  } else {
    for (const auto& t : I.boundary) {
      Rational mu = t.mu.at(a, b);
      size_t ord = 0;
      while (ord < t.num.size() && t.num[ord] == Rational(0)) ++ord;
      Rational mn = mu + Rational(static_cast<long long>(ord));
      if (mn > Rational(-1)) continue;
      if (is_integer(mu)) {
        b_ok = c_ok = false;
      } else {
        needs_poch = true;
      }
    }
  }
  if (!trig_pole_free(I, a)) b_ok = c_ok = false;
  v.route_b = b_ok && pref_ok;
  v.route_b_needs_poch = needs_poch;
  v.route_c = c_ok && pref_ok;
  v.continuation_ok = !is_integer(I.nonintegral.at(a, b));
  if (needs_poch && !v.continuation_ok) v.route_b = v.route_c = false;

  v.route_d = I.g1.at(a, b) > Rational(0) &&
              I.g1.at(a, b) + I.g2.at(a, b) > Rational(0) &&
              I.g1.at(a, b) + I.g3.at(a, b) > Rational(0);

  if (!v.ok()) v.reason = "no route admits these parameters";
  if (!v.in_box) {
    if (v.reason.empty()) v.reason = "outside the convergence box (continuation routes only)";
  }
  return v;
}

namespace {

LogCombination closed_form_boundary(const Identity& I, const Rational& a,
                                    const Rational& b) {
  LogCombination total;
  if (I.digamma_boundary) {
    // (1/b)[psi(1+b-a) - psi(1-a)]
    total = digamma_difference(1 + b - a, 1 - a).scaled(AlgExpr(Rational(1) / b));
  } else {
    for (const auto& t : I.boundary) {
      Rational mu = t.mu.at(a, b);
      std::vector<AlgExpr> num;
      for (const auto& c : t.num) num.push_back(AlgExpr(c / t.den_lead));
      LogCombination piece = closed_form_integral(mu, num, t.roots, true);
      total += piece.scaled(AlgExpr(t.sign));
    }
  }
  if (I.trig)
    total += trig_correction(*I.trig, a).scaled(AlgExpr(I.trig_sign));
  if (I.orientation < 0) total = total.scaled(AlgExpr(Rational(-1)));
  total.normalize();
  return total;
}

}  // namespace

LogCombination closed_form(const std::string& id, const Params& p) {
  const Identity& I = lookup(id);
  if (I.is_p14 || I.stokes_form)
    throw UnknownIdentity(id + " has no standalone closed form");
  Validity v = validity(id, p);
  if (!v.route_c) throw NonConvergent("route C invalid at these parameters: " + v.reason);
  const Rational a = p.alpha;
  const Rational b = p.beta.value_or(Rational(0));
  LogCombination rhs = closed_form_boundary(I, a, b);
  Rational pref = prefactor(I, a, b);
  LogCombination F = rhs.scaled(AlgExpr(Rational(1) / pref));
  F.normalize();
  return F;
}

VerificationRecord verify(const std::string& id, const Params& p,
                          unsigned precision, const Real& tolerance, bool with_2d) {
  const Identity& I = lookup(id);
  VerificationRecord rec;
  rec.id = id;
  rec.params = p;
  rec.precision = precision;
  rec.tolerance = tolerance;
  rec.orientation = I.orientation;
  rec.orientation_note = I.orientation_note;

  const unsigned digits = digits_for(tolerance, (std::max)(precision, 25u));
  PrecisionGuard guard(digits);
  const Rational a = p.alpha;
  const Rational b = p.beta.value_or(Rational(0));
  Validity v = validity(id, p);

  if (I.is_p14) {
    Rational a1 = p.alpha, a2 = p.beta.value_or(Rational(0)),
             a3 = p.gamma.value_or(Rational(0));
    if (v.route_a) {
      try {
        Rational pd = (a1 + a2) * (a1 + a3);
        SeriesResult F = f32_at_1(to_real(a1 + a2 + a3), to_real(a1 + a2 + 1),
                                  to_real(a1 + a3 + 1), tolerance / 8);
        rec.series_a.computed = true;
        rec.series_a.value = F.value / to_real(pd);
        rec.series_a.error = F.error / abs(to_real(pd));
        rec.series_a.evaluations = F.evaluations;
      } catch (const Error& e) {
        rec.series_a.note = e.what();
      }
    }
    if (v.route_d && with_2d) {
      try {
        PrecisionGuard g2(22);
        Real t2 = (std::max)(Real(tolerance), Real(1e-7));
        QuadResult q = gamma1_double(to_real(a1), to_real(a2), to_real(a3), t2, 9);
        rec.double_d.computed = true;
        rec.double_d.value = q.value;
        rec.double_d.error = q.error;
        rec.double_d.evaluations = q.evaluations;
      } catch (const Error& e) {
        rec.double_d.note = e.what();
      }
    }
  } else {
    // route A: series
    if (v.route_a) {
      try {
        SeriesResult F = f32_at_1(to_real(I.f3.at(a, b)), to_real(I.f4.at(a, b)),
                                  to_real(I.f5.at(a, b)), tolerance / 8);
        Rational pref = prefactor(I, a, b);
        rec.series_a.computed = true;
        rec.series_a.value = to_real(pref) * F.value;
        rec.series_a.error = abs(to_real(pref)) * F.error;
        rec.series_a.evaluations = F.evaluations;
      } catch (const Error& e) {
        rec.series_a.note = e.what();
      }
    } else {
      rec.series_a.note = "route unavailable at these parameters";
    }

    // route B: boundary quadrature + trig term
    if (v.route_b) {
      try {
        Real acc(0), err(0);
        long evals = 0;
        Real tol_each = tolerance / (8 * (I.boundary.size() + 1));
        if (I.digamma_boundary) {
          QuadResult q = quad_1d(ex0_spec(a, b), tol_each);
          acc = q.value;
          err = q.error;
          evals = q.evaluations;
        } else {
          for (const auto& t : I.boundary) {
            IntegrandSpec spec = boundary_spec(t, a, b);
            Rational mn = spec.min_exponent();
            QuadResult q;
            if (mn > Rational(-1)) {
              q = quad_1d(spec, tol_each);
            } else {
              Real dist = spec.distance_to_origin_pole();
              Real eps = (std::min)(Real(Real(1) / 2), dist / 2);
              q = poch_contour(to_real(t.mu.at(a, b)), spec, eps, tol_each);
            }
            acc += to_real(t.sign) * q.value;
            err += abs(to_real(t.sign)) * q.error;
            evals += q.evaluations;
          }
        }
        if (I.trig) {
          Ball tb = trig_correction(*I.trig, a).eval();
          acc += to_real(I.trig_sign) * tb.mid.re;
          err += tb.rad + abs(tb.mid.im);
        }
        rec.boundary_b.computed = true;
        rec.boundary_b.value = Real(I.orientation) * acc;
        rec.boundary_b.error = err;
        rec.boundary_b.evaluations = evals;
      } catch (const Error& e) {
        rec.boundary_b.note = e.what();
      }
    } else {
      rec.boundary_b.note = "route unavailable at these parameters";
    }

    // route C: exact log combination evaluated at >= 50 digits
    if (v.route_c) {
      try {
        unsigned cd = (std::max)(precision, 50u);
        LogCombination rhs = closed_form_boundary(I, a, b);
        Ball cb = rhs.eval(cd);
        rec.closed_c.computed = true;
        rec.closed_c.value = cb.mid.re;
        rec.closed_c.error = cb.rad + abs(cb.mid.im);
        if (!I.stokes_form) {
          rec.has_closed_form = true;
          rec.closed_form = closed_form(id, p);
        }
      } catch (const Error& e) {
        rec.closed_c.note = e.what();
      }
    } else {
      rec.closed_c.note = "route unavailable at these parameters";
    }

    // route D: Gamma_1 double integral
    if (v.route_d && with_2d) {
      try {
        PrecisionGuard g2(22);
        Real t2 = (std::max)(Real(tolerance), Real(1e-7));
        QuadResult q = gamma1_double(to_real(I.g1.at(a, b)), to_real(I.g2.at(a, b)),
                                     to_real(I.g3.at(a, b)), t2, 9);
        rec.double_d.computed = true;
        rec.double_d.value = to_real(I.scale2d.at(a, b)) * q.value;
        rec.double_d.error = abs(to_real(I.scale2d.at(a, b))) * q.error;
        rec.double_d.evaluations = q.evaluations;
      } catch (const Error& e) {
        rec.double_d.note = e.what();
      }
    } else if (!v.route_d) {
      rec.double_d.note = "outside the 2D convergence region";
    } else {
      rec.double_d.note = "2D route disabled";
    }
  }

  // pairwise residuals
  struct Entry {
    const char* tag;
    const RouteStatus* r;
  };
  std::vector<Entry> entries = {{"A", &rec.series_a},
                                {"B", &rec.boundary_b},
                                {"C", &rec.closed_c},
                                {"D", &rec.double_d}};
  const Real loose = (std::max)(Real(tolerance), Real(1e-6));
  int computed = 0;
  bool pass = true;
  for (const auto& e : entries)
    if (e.r->computed) ++computed;
  for (size_t i = 0; i < entries.size(); ++i) {
    for (size_t j = i + 1; j < entries.size(); ++j) {
      if (!entries[i].r->computed || !entries[j].r->computed) continue;
      Real x = entries[i].r->value, y = entries[j].r->value;
      Real denom = (std::max)({Real(1), abs(x), abs(y)});
      Real res = abs(x - y) / denom;
      std::string label = std::string(entries[i].tag) + "-" + entries[j].tag;
      rec.residuals.push_back({label, res});
      Real bound = (label.find('D') != std::string::npos) ? loose : Real(tolerance);
      if (res > bound) pass = false;
    }
  }
  rec.pass = pass && computed >= 2;
  return rec;
}

std::vector<Params> sample_params(const std::string& id, int count, unsigned long seed) {
  const Identity& I = lookup(id);
  std::mt19937_64 gen(seed ^ std::hash<std::string>{}(id));
  auto draw = [&](long lo, long hi) {  // inclusive, deterministic across platforms
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
  };
  std::vector<Params> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < count && ++guard < 20000) {
    long q = draw(2, 60);
    Params p;
    if (I.is_p14) {
      p.alpha = Rational(draw(1, 2 * q), q);
      p.beta = Rational(draw(-q / 2, 2 * q), q);
      p.gamma = Rational(draw(-q / 2, 2 * q), q);
      Validity v = validity(id, p);
      if (!v.route_a || !v.route_d) continue;
      if (p.alpha + *p.beta + *p.gamma < Rational(1, 4)) continue;
      if (p.alpha < Rational(1, 5)) continue;
    } else {
      Rational lo = I.alpha_lo.value_or(Rational(-3, 4));
      Rational hi = I.alpha_hi.value_or(Rational(3, 2));
      long plo = rat_floor(lo * q) + 1;
      long phi = rat_floor(hi * q);
      if (phi < plo) continue;
      p.alpha = Rational(draw(plo, phi), q);
      if (I.has_beta) {
        Rational abs_a = p.alpha < Rational(0) ? -p.alpha : p.alpha;
        Rational blo = I.id == "EX0" ? Rational(0) : abs_a - 1;
        Rational bhi = I.id == "EX0" ? Rational(1) : Rational(3, 2);
        long qb = draw(2, 60);
        long bplo = rat_floor(blo * qb) + 1;
        long bphi = rat_floor(bhi * qb);
        if (bphi < bplo) continue;
        p.beta = Rational(draw(bplo, bphi), qb);
      }
      Validity v = validity(id, p);
      if (!(v.in_box && v.route_a && v.route_b && v.route_c)) continue;
      if (margin_of(I, p.alpha, p.beta.value_or(Rational(0))) < Rational(1, 5)) continue;
      // keep quadrature exponents clear of -1
      bool close = false;
      for (const auto& t : I.boundary) {
        Rational mu = t.mu.at(p.alpha, p.beta.value_or(Rational(0)));
        size_t ord = 0;
        while (ord < t.num.size() && t.num[ord] == Rational(0)) ++ord;
        if (mu + Rational(static_cast<long long>(ord)) < Rational(-9, 10)) close = true;
      }
      if (I.digamma_boundary && p.alpha > Rational(9, 10)) close = true;
      if (close) continue;
      // prefactor should not collapse the value scale
      Rational pref = prefactor(I, p.alpha, p.beta.value_or(Rational(0)));
      if (pref == Rational(0)) continue;
    }
    bool dup = false;
    for (const auto& q2 : out)
      if (q2.alpha == p.alpha && q2.beta == p.beta && q2.gamma == p.gamma) dup = true;
    if (!dup) out.push_back(p);
  }
  if (static_cast<int>(out.size()) < count)
    throw Error("sample_params: could not find enough admissible points for " + id);
  return out;
}

}  // namespace hyperlog::identities
