#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "hyperlog/rational.hpp"

namespace hyperlog::characters {

// Four rationals a_i/m in (0,1) with common denominator m, stored by their
// numerators. Primitivity gcd(a_0,..,a_3,m)=1 makes m the true denominator.
struct CharacterTuple {
  std::array<int, 4> a{};
  int m = 0;

  // Throws InvalidTuple unless 1 <= a_i <= m-1 and the tuple is primitive.
  static CharacterTuple make(const std::array<int, 4>& a, int m);
};

enum class ClassType { Type1, Type2a, Type2b, Type2c, Exceptional };

const char* to_string(ClassType t);

struct ClassLabel {
  ClassType type = ClassType::Exceptional;
  // Type2*: the family parameter is alpha = b/(2m). The half-integral lattice
  // matters: for m = 2 mod 4 the 2c family hits denominator-m tuples only
  // through odd b.
  int b = -1;
  std::array<int, 4> pairing{};  // Type1: indices i,j,k,l with a_i+a_j = a_k+a_l = 0 mod m

  Rational family_alpha(int m) const { return Rational(b, 2LL * m); }
};

bool is_hodge(const CharacterTuple& t);

// Requires is_hodge(t); families are tried in the order 1, 2a, 2b, 2c.
ClassLabel classify(const CharacterTuple& t);

// Sorted numerator tuples {sort(<s a_0>,..,<s a_3>) * m : s in (Z/mZ)^x}.
std::set<std::array<int, 4>> galois_orbit(const CharacterTuple& t);

struct Orbit {
  std::array<int, 4> rep;                  // lexicographically least member
  std::vector<std::array<int, 4>> members; // sorted ascending
};

struct ExceptionalReport {
  int m = 0;
  long e_m = 0;  // number of exceptional sorted tuples
  long o_m = 0;  // number of Galois orbits
  std::vector<Orbit> orbits;
};

ExceptionalReport enumerate_exceptional(int m);

std::vector<int> units_mod(int m);

}  // namespace hyperlog::characters
