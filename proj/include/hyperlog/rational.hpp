#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace hyperlog {

// Exact rational arithmetic for exponents, character data and prefactors.
// Magnitudes stay small (denominators are capped at a few hundred), so a
// 64-bit backend is sufficient.
using Rational = boost::rational<long long>;

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

long long rat_floor(const Rational& q);

// Fractional part <q> in [0,1).
Rational frac(const Rational& q);

bool is_integer(const Rational& q);

Rational rat_pow(const Rational& q, long long e);

// Accepts "p", "-p/q", with optional surrounding whitespace.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace hyperlog
