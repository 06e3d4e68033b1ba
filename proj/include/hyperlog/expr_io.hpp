#pragma once

#include <json.hpp>

#include <string>

#include "hyperlog/logcomb.hpp"

namespace hyperlog {

using json = nlohmann::ordered_json;

// Text grammar shared by AlgExpr and LogCombination rendering:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := atom ['^' exponent]
//   exponent := integer | '(' rational ')'
//   atom     := integer | 'pi' | 'i' | 'e' '(' rational ')'
//             | 'log' '(' expr ')' | '(' expr ')'
// log(...) may appear linearly (coefficients times a log), matching the
// target space Qbar + Qbar*log + Qbar*pi.
AlgExpr parse_algexpr(const std::string& text);          // rejects log(...)
LogCombination parse_logcomb(const std::string& text);

json algexpr_to_json(const AlgExpr& x);
AlgExpr algexpr_from_json(const json& j);

json logcomb_to_json(const LogCombination& L);
LogCombination logcomb_from_json(const json& j);

}  // namespace hyperlog
