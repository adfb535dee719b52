#ifndef TAUBERIAN_ERRORS_H_
#define TAUBERIAN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tauberian {

// Argument outside the mathematical domain of an operation (negative time,
// nonpositive horizon or discount, wrong state dimension).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition between arguments failed, e.g. mismatched
// endpoints of a concatenation.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A user-supplied mapping broke its contract (cost or objective out of
// [0,1], family built a process with the wrong anchor).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Numerical procedure failed to converge on [lo, hi].
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}

  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace tauberian

#endif  // TAUBERIAN_ERRORS_H_
