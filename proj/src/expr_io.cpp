#include "hyperlog/expr_io.hpp"

#include <cctype>
#include <cstring>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

// Parse into constant + log terms directly; multiplication must stay linear
// in the log terms.
struct LinForm {
  AlgExpr c;
  std::vector<LogTerm> terms;

  bool pure() const { return terms.empty(); }
};

LinForm lin_const(AlgExpr x) { return {std::move(x), {}}; }

LinForm lin_add(const LinForm& a, const LinForm& b, bool minus) {
  LinForm r;
  r.c = minus ? a.c - b.c : a.c + b.c;
  r.terms = a.terms;
  for (const auto& t : b.terms)
    r.terms.push_back({minus ? -t.coeff : t.coeff, t.arg});
  return r;
}

LinForm lin_scale(const LinForm& a, const AlgExpr& s) {
  LinForm r;
  r.c = a.c * s;
  for (const auto& t : a.terms) r.terms.push_back({t.coeff * s, t.arg});
  return r;
}

LinForm lin_mul(const LinForm& a, const LinForm& b) {
  if (!a.pure() && !b.pure())
    throw ParseError("product of two logarithmic expressions");
  return a.pure() ? lin_scale(b, a.c) : lin_scale(a, b.c);
}

LinForm lin_div(const LinForm& a, const LinForm& b) {
  if (!b.pure()) throw ParseError("division by a logarithmic expression");
  return lin_scale(a, AlgExpr(Rational(1)) / b.c);
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  LinForm parse() {
    LinForm r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input at '" + rest() + "'");
    return r;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  std::string rest() const { return s_.substr(pos_, 12); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' at '" + rest() + "'");
  }

  bool eat_word(const char* w) {
    skip_ws();
    size_t len = std::strlen(w);
    if (s_.compare(pos_, len, w) != 0) return false;
    size_t end = pos_ + len;
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }

  long long integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer at '" + rest() + "'");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  Rational rational() {
    bool neg = eat('-');
    long long num = integer();
    long long den = eat('/') ? integer() : 1;
    Rational r(num, den);
    return neg ? -r : r;
  }

  LinForm expr() {
    bool neg = eat('-');
    LinForm acc = term();
    if (neg) acc = lin_scale(acc, AlgExpr(Rational(-1)));
    for (;;) {
      if (eat('+'))
        acc = lin_add(acc, term(), false);
      else if (eat('-'))
        acc = lin_add(acc, term(), true);
      else
        return acc;
    }
  }

  LinForm term() {
    LinForm acc = factor();
    for (;;) {
      if (eat('*'))
        acc = lin_mul(acc, factor());
      else if (eat('/'))
        acc = lin_div(acc, factor());
      else
        return acc;
    }
  }

  LinForm factor() {
    LinForm base = atom();
    skip_ws();
    if (eat('^')) {
      Rational e;
      if (eat('(')) {
        e = rational();
        expect(')');
      } else {
        bool neg = eat('-');
        e = Rational(integer());
        if (neg) e = -e;
      }
      if (!base.pure()) throw ParseError("power of a logarithmic expression");
      return lin_const(base.c.pow(e));
    }
    return base;
  }

  LinForm atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input");
    if (eat_word("pi")) return lin_const(AlgExpr::pi());
    if (eat_word("i")) return lin_const(AlgExpr::e(Rational(1, 4)));
    if (eat_word("e")) {
      expect('(');
      Rational q = rational();
      expect(')');
      return lin_const(AlgExpr::e(q));
    }
    if (eat_word("log")) {
      expect('(');
      LinForm inner = expr();
      expect(')');
      if (!inner.pure()) throw ParseError("nested logarithm");
      LinForm r;
      r.c = AlgExpr();
      r.terms.push_back({AlgExpr(Rational(1)), inner.c});
      return r;
    }
    if (eat('(')) {
      LinForm r = expr();
      expect(')');
      return r;
    }
    if (eat('-')) return lin_scale(atom(), AlgExpr(Rational(-1)));
    return lin_const(AlgExpr(Rational(integer())));
  }
};

}  // namespace

AlgExpr parse_algexpr(const std::string& text) {
  LinForm f = Parser(text).parse();
  if (!f.pure()) throw ParseError("logarithm not allowed in an algebraic expression");
  return f.c;
}

LogCombination parse_logcomb(const std::string& text) {
  LinForm f = Parser(text).parse();
  LogCombination L(f.c);
  for (auto& t : f.terms) L.add_term(t.coeff, t.arg);
  return L;
}

json algexpr_to_json(const AlgExpr& x) {
  using Kind = AlgExpr::Kind;
  const auto& n = x.node();
  switch (n.kind) {
    case Kind::Leaf: {
      json j;
      j["op"] = "const";
      if (n.leaf.is_zero()) {
        j["zero"] = true;
        return j;
      }
      j["unity"] = to_string(n.leaf.unity());
      json primes = json::array();
      for (const auto& [p, e] : n.leaf.exponents())
        primes.push_back(json::array({std::to_string(p), to_string(e)}));
      j["primes"] = primes;
      return j;
    }
    case Kind::Pi: return json{{"op", "pi"}};
    case Kind::Pow:
      return json{{"op", "pow"},
                  {"a", algexpr_to_json(AlgExpr::from_node(n.a))},
                  {"exp", to_string(n.expo)}};
    default: {
      const char* name = n.kind == Kind::Add   ? "add"
                         : n.kind == Kind::Sub ? "sub"
                         : n.kind == Kind::Mul ? "mul"
                                               : "div";
      return json{{"op", name},
                  {"a", algexpr_to_json(AlgExpr::from_node(n.a))},
                  {"b", algexpr_to_json(AlgExpr::from_node(n.b))}};
    }
  }
}

AlgExpr algexpr_from_json(const json& j) {
  const std::string op = j.at("op").get<std::string>();
  if (op == "const") {
    if (j.contains("zero") && j["zero"].get<bool>()) return AlgExpr();
    RadicalMonomial m = RadicalMonomial::e(parse_rational(j.at("unity").get<std::string>()));
    for (const auto& pe : j.at("primes")) {
      long long p = std::stoll(pe.at(0).get<std::string>());
      Rational e = parse_rational(pe.at(1).get<std::string>());
      m = m * RadicalMonomial::prime_power(p, e);
    }
    return AlgExpr(m);
  }
  if (op == "pi") return AlgExpr::pi();
  if (op == "pow")
    return algexpr_from_json(j.at("a")).pow(parse_rational(j.at("exp").get<std::string>()));
  AlgExpr a = algexpr_from_json(j.at("a"));
  AlgExpr b = algexpr_from_json(j.at("b"));
  if (op == "add") return a + b;
  if (op == "sub") return a - b;
  if (op == "mul") return a * b;
  if (op == "div") return a / b;
  throw ParseError("unknown operator tag: " + op);
}

json logcomb_to_json(const LogCombination& L) {
  json j;
  j["constant"] = algexpr_to_json(L.constant());
  json terms = json::array();
  for (const auto& t : L.terms())
    terms.push_back(json{{"coeff", algexpr_to_json(t.coeff)},
                         {"arg", algexpr_to_json(t.arg)}});
  j["terms"] = terms;
  return j;
}

LogCombination logcomb_from_json(const json& j) {
  LogCombination L(algexpr_from_json(j.at("constant")));
  for (const auto& t : j.at("terms"))
    L.add_term(algexpr_from_json(t.at("coeff")), algexpr_from_json(t.at("arg")));
  return L;
}

}  // namespace hyperlog
