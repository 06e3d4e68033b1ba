#include "hyperlog/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hyperlog/errors.hpp"

namespace hyperlog::characters {

const char* to_string(ClassType t) {
  switch (t) {
    case ClassType::Type1: return "Type1";
    case ClassType::Type2a: return "Type2a";
    case ClassType::Type2b: return "Type2b";
    case ClassType::Type2c: return "Type2c";
    case ClassType::Exceptional: return "Exceptional";
  }
  return "?";
}

CharacterTuple CharacterTuple::make(const std::array<int, 4>& a, int m) {
  if (m < 2) throw InvalidTuple("common denominator must be >= 2");
  int g = m;
  for (int x : a) {
    if (x < 1 || x > m - 1)
      throw InvalidTuple("numerators must satisfy 1 <= a_i <= m-1");
    g = std::gcd(g, x);
  }
  if (g != 1) throw InvalidTuple("tuple is not primitive: gcd(a, m) != 1");
  return CharacterTuple{a, m};
}

std::vector<int> units_mod(int m) {
  std::vector<int> u;
  for (int s = 1; s < m; ++s)
    if (std::gcd(s, m) == 1) u.push_back(s);
  return u;
}

namespace {

bool hodge_raw(const std::array<int, 4>& a, int m, const std::vector<int>& units) {
  for (int t : units) {
    long long sum = 0;
    for (int x : a) sum += (static_cast<long long>(t) * x) % m;
    if (sum != 2LL * m) return false;
  }
  return true;
}

std::array<int, 4> sorted_mult(const std::array<int, 4>& a, int m, int s) {
  std::array<int, 4> r;
  for (int i = 0; i < 4; ++i)
    r[i] = static_cast<int>((static_cast<long long>(s) * a[i]) % m);
  std::sort(r.begin(), r.end());
  return r;
}

// Family tuples of Theorem-type 2 for parameter alpha = b/(2m). Working over
// the denominator 2m is enough: the entries 1-alpha (2a, 2b) and 1-2alpha
// (2c) pin alpha to (1/m)Z and (1/2m)Z respectively. In particular 2c with b
// odd covers the m = 2 mod 4 tuples whose parameter denominator is 2m.
// Entries are numerators over 2m; a match requires all of them even (so the
// tuple lives over m) and nonzero.
bool family_tuple(ClassType fam, int b, int m, std::array<int, 4>& out) {
  const int D = 2 * m;
  auto md = [D](long long x) { return static_cast<int>(((x % D) + D) % D); };
  std::array<int, 4> e;
  switch (fam) {
    case ClassType::Type2a:
      e = {md(2LL * b), md(-b), md(m - b), m};
      break;
    case ClassType::Type2b:
      if (m % 3) return false;
      e = {md(3LL * b), md(-b), md(2LL * m / 3 - b), md(4LL * m / 3 - b)};
      break;
    case ClassType::Type2c:
      if (m % 2) return false;
      e = {md(4LL * b), md(-2LL * b), md(m / 2 - b), md(3LL * m / 2 - b)};
      break;
    default:
      return false;
  }
  for (int i = 0; i < 4; ++i) {
    if (e[i] == 0 || e[i] % 2) return false;
    out[i] = e[i] / 2;
  }
  std::sort(out.begin(), out.end());
  return true;
}

}  // namespace

bool is_hodge(const CharacterTuple& t) {
  CharacterTuple::make(t.a, t.m);  // revalidate; throws InvalidTuple
  return hodge_raw(t.a, t.m, units_mod(t.m));
}

ClassLabel classify(const CharacterTuple& t) {
  if (!is_hodge(t)) throw NotHodge("classify requires a Hodge tuple");
  const int m = t.m;
  // Type1: a pairing with a_i + a_j = 0 mod m (the complementary pair follows
  // because the total is 2m).
  static const std::array<std::array<int, 4>, 3> pairings = {
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& p : pairings) {
    if ((t.a[p[0]] + t.a[p[1]]) % m == 0 && (t.a[p[2]] + t.a[p[3]]) % m == 0)
      return ClassLabel{ClassType::Type1, -1, p};
  }
  std::array<int, 4> sorted = t.a;
  std::sort(sorted.begin(), sorted.end());
  for (ClassType fam : {ClassType::Type2a, ClassType::Type2b, ClassType::Type2c}) {
    for (int b = 0; b < 2 * m; ++b) {
      std::array<int, 4> f;
      if (family_tuple(fam, b, m, f) && f == sorted)
        return ClassLabel{fam, b, {}};
    }
  }
  return ClassLabel{ClassType::Exceptional, -1, {}};
}

std::set<std::array<int, 4>> galois_orbit(const CharacterTuple& t) {
  CharacterTuple::make(t.a, t.m);
  std::set<std::array<int, 4>> orbit;
  for (int s : units_mod(t.m)) orbit.insert(sorted_mult(t.a, t.m, s));
  return orbit;
}

ExceptionalReport enumerate_exceptional(int m) {
  if (m < 2) throw InvalidTuple("enumerate_exceptional requires m >= 2");
  ExceptionalReport report;
  report.m = m;
  const std::vector<int> units = units_mod(m);
  std::set<std::array<int, 4>> exceptional;

  // Sorted primitive tuples with exact sum 2m (forced by the t=1 Hodge sum).
  for (int a0 = 1; a0 <= m - 1; ++a0) {
    for (int a1 = a0; a1 <= m - 1; ++a1) {
      for (int a2 = a1; a2 <= m - 1; ++a2) {
        int a3 = 2 * m - a0 - a1 - a2;
        if (a3 < a2 || a3 > m - 1) continue;
        std::array<int, 4> a = {a0, a1, a2, a3};
        int g = std::gcd(std::gcd(a0, a1), std::gcd(a2, std::gcd(a3, m)));
        if (g != 1) continue;
        if (!hodge_raw(a, m, units)) continue;
        CharacterTuple tup{a, m};
        if (classify(tup).type != ClassType::Exceptional) continue;
        exceptional.insert(a);
      }
    }
  }

  report.e_m = static_cast<long>(exceptional.size());
  std::set<std::array<int, 4>> seen;
  for (const auto& a : exceptional) {
    if (seen.count(a)) continue;
    auto orbit = galois_orbit(CharacterTuple{a, m});
    Orbit o;
    o.members.assign(orbit.begin(), orbit.end());
    o.rep = o.members.front();
    report.orbits.push_back(o);
    seen.insert(orbit.begin(), orbit.end());
  }
  std::sort(report.orbits.begin(), report.orbits.end(),
            [](const Orbit& x, const Orbit& y) { return x.rep < y.rep; });
  report.o_m = static_cast<long>(report.orbits.size());
  return report;
}

}  // namespace hyperlog::characters
