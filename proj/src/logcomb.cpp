#include "hyperlog/logcomb.hpp"

#include <sstream>

#include "hyperlog/errors.hpp"

namespace hyperlog {

LogCombination LogCombination::term(AlgExpr coeff, AlgExpr arg) {
  LogCombination L;
  L.add_term(std::move(coeff), std::move(arg));
  return L;
}

void LogCombination::add_term(AlgExpr coeff, AlgExpr arg) {
  if (coeff.is_syntactic_zero()) return;
  terms_.push_back({std::move(coeff), std::move(arg)});
}

LogCombination& LogCombination::operator+=(const LogCombination& o) {
  constant_ = constant_ + o.constant_;
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

LogCombination& LogCombination::operator-=(const LogCombination& o) {
  constant_ = constant_ - o.constant_;
  for (const auto& t : o.terms_) terms_.push_back({-t.coeff, t.arg});
  return *this;
}

LogCombination LogCombination::scaled(const AlgExpr& c) const {
  LogCombination r;
  r.constant_ = constant_ * c;
  for (const auto& t : terms_) r.add_term(t.coeff * c, t.arg);
  return r;
}

void LogCombination::normalize() {
  std::vector<LogTerm> merged;
  for (const auto& t : terms_) {
    if (t.coeff.is_syntactic_zero()) continue;
    if (t.arg.is_leaf() && t.arg.leaf().is_one()) continue;  // log 1 = 0
    bool found = false;
    for (auto& m : merged) {
      if (m.arg.same(t.arg)) {
        m.coeff = m.coeff + t.coeff;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(t);
  }
  terms_.clear();
  for (auto& m : merged)
    if (!m.coeff.is_syntactic_zero()) terms_.push_back(std::move(m));
}

Ball LogCombination::eval() const {
  Ball acc = constant_.eval();
  for (const auto& t : terms_) {
    Ball arg = t.arg.eval();
    acc = acc + t.coeff.eval() * ball_log(arg);
  }
  return acc;
}

Ball LogCombination::eval(unsigned digits10) const {
  PrecisionGuard guard(digits10 + 10);
  Ball b = eval();
  Real cap = pow(Real(10), -static_cast<int>(digits10) + 2);
  if (b.rad > cap) throw ToleranceNotMet("eval radius exceeds requested precision");
  return b;
}

Ball eval_logcomb(const LogCombination& L, unsigned precision_digits10) {
  if (precision_digits10 < 15) throw BadRadius("precision must be >= 15 digits");
  return L.eval(precision_digits10);
}

std::string LogCombination::to_string() const {
  std::ostringstream os;
  bool wrote = false;
  if (!constant_.is_syntactic_zero() || terms_.empty()) {
    os << constant_.to_string();
    wrote = true;
  }
  for (const auto& t : terms_) {
    if (wrote) os << " + ";
    std::string c = t.coeff.to_string();
    if (!(t.coeff.is_leaf() && t.coeff.leaf().is_one())) {
      bool paren = c.find(' ') != std::string::npos || c.find('-') == 0;
      os << (paren ? "(" + c + ")" : c) << "*";
    }
    os << "log(" << t.arg.to_string() << ")";
    wrote = true;
  }
  return os.str();
}

}  // namespace hyperlog
