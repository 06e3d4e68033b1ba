#pragma once

#include <string>
#include <vector>

#include "hyperlog/algexpr.hpp"

namespace hyperlog {

// An element of Qbar + Qbar*log(Qbar^x) + Qbar*pi: an algebraic constant plus
// finitely many coeff*log(arg) terms under the principal branch.
struct LogTerm {
  AlgExpr coeff;
  AlgExpr arg;
};

class LogCombination {
 public:
  LogCombination() = default;
  explicit LogCombination(AlgExpr constant) : constant_(std::move(constant)) {}

  static LogCombination term(AlgExpr coeff, AlgExpr arg);

  const AlgExpr& constant() const { return constant_; }
  const std::vector<LogTerm>& terms() const { return terms_; }

  LogCombination& operator+=(const LogCombination& o);
  LogCombination& operator-=(const LogCombination& o);
  friend LogCombination operator+(LogCombination a, const LogCombination& b) {
    a += b;
    return a;
  }
  friend LogCombination operator-(LogCombination a, const LogCombination& b) {
    a -= b;
    return a;
  }

  LogCombination scaled(const AlgExpr& c) const;
  void add_constant(const AlgExpr& c) { constant_ = constant_ + c; }
  void add_term(AlgExpr coeff, AlgExpr arg);

  // Merge terms whose arguments are syntactically identical; drop terms with
  // syntactically zero coefficient or argument 1.
  void normalize();

  Ball eval() const;                   // current working precision
  Ball eval(unsigned digits10) const;  // spec eval_logcomb

  std::string to_string() const;

 private:
  AlgExpr constant_;
  std::vector<LogTerm> terms_;
};

Ball eval_logcomb(const LogCombination& L, unsigned precision_digits10);

}  // namespace hyperlog
