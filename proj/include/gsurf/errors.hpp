#pragma once

#include <stdexcept>
#include <string>

namespace gsurf {

enum class ErrorKind {
  // input-side: bad user data or parameters
  NotAGroup,
  Abelian,
  CapExceeded,
  InvalidParameter,
  Io,
  // math-side: a theorem-backed invariant failed, or a precondition on a
  // mathematically meaningful operation was violated
  CentralElement,
  NotInjectiveOnCommutators,
  IdentityViolation,
  MonotonicityViolation,
  DivisibilityViolation,
  InconsistentGonality,
  MoreThanTwoValencies,
  DiamondViolation,
  DisconnectedIncidenceGraph,
  NoMatch,
};

const char* error_kind_name(ErrorKind k);

// Input errors get exit code 2 from the CLI; invariant failures get 3.
bool is_input_error(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace gsurf
