#ifndef GINOE_ERRORS_HPP
#define GINOE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ginoe {

// Exit-code conventions shared with the CLI:
//   0 ok, 2 usage, 3 domain error, 4 verification failure, 5 internal inconsistency.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual int exit_code() const noexcept { return 1; }
};

// Precondition violations: bad N, p out of range, x inside the branch cut, ...
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
  int exit_code() const noexcept override { return 3; }
};

// A denominator parameter of a hypergeometric series hits a nonpositive integer
// without a numerator parameter terminating the series first (0/0 in a term).
struct IndeterminateParamsError : DomainError {
  explicit IndeterminateParamsError(const std::string& msg) : DomainError(msg) {}
};

// Series/iteration failed to reach its bound within the iteration cap.
struct NonConvergenceError : Error {
  explicit NonConvergenceError(const std::string& msg) : Error(msg) {}
  int exit_code() const noexcept override { return 3; }
};

// An internal cross-check failed (e.g. an exact linear solve that the theory
// guarantees consistent turned out inconsistent).  Always a bug, never data.
struct InternalInconsistencyError : Error {
  explicit InternalInconsistencyError(const std::string& msg) : Error(msg) {}
  int exit_code() const noexcept override { return 5; }
};

}  // namespace ginoe

#endif
