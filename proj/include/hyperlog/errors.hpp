#pragma once

#include <stdexcept>
#include <string>

namespace hyperlog {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define HYPERLOG_ERROR(Name)                                   \
  struct Name : Error {                                        \
    explicit Name(const std::string& msg = #Name) : Error(msg) {} \
  }

HYPERLOG_ERROR(InvalidTuple);
HYPERLOG_ERROR(NotHodge);
HYPERLOG_ERROR(DivisionNearZero);
HYPERLOG_ERROR(BranchAmbiguity);
HYPERLOG_ERROR(PoleOnPath);
HYPERLOG_ERROR(InvalidExponent);
HYPERLOG_ERROR(RepeatedRoot);
HYPERLOG_ERROR(NonConvergent);
HYPERLOG_ERROR(TrigPole);
HYPERLOG_ERROR(Divergent);
HYPERLOG_ERROR(ToleranceNotMet);
HYPERLOG_ERROR(IntegerAlpha);
HYPERLOG_ERROR(BadRadius);
HYPERLOG_ERROR(UnknownIdentity);
HYPERLOG_ERROR(VerificationFailed);
HYPERLOG_ERROR(ParseError);

#undef HYPERLOG_ERROR

}  // namespace hyperlog
