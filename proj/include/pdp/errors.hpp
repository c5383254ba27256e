#ifndef PDP_ERRORS_HPP
#define PDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdp {

enum class Errc {
  NotIrreducible,
  DegreeMismatch,
  ContextMismatch,
  DivisionByZero,
  OddDegreeRequired,
  NotOnCurve,
  TooLarge,
  DuplicateVariable,
  VariableAbsent,
  Unsupported,
  UnassignedVariable,
  UniverseMismatch,
  UnknownBlock,
  UnregisteredVariable,
  EmptyFactorBase,
  TooManyMonomials,
  SearchSpaceTooLarge,
  Timeout,
  ParseError,
};

const char* errc_name(Errc c);

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace pdp

#endif
