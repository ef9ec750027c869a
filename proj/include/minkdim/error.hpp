#ifndef MINKDIM_ERROR_HPP
#define MINKDIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace minkdim {

/// Thrown when an argument violates an operation's precondition
/// (digit out of range, rational outside (0,1], n <= 8, ...).
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration would produce more cylinders than allowed.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(unsigned long long requested, unsigned long long budget)
      : std::runtime_error("enumeration of " + std::to_string(requested) +
                           " cylinders exceeds budget of " +
                           std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}

  unsigned long long requested() const noexcept { return requested_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long requested_;
  unsigned long long budget_;
};

/// A root finder failed to reach the requested residual.
class tolerance_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace minkdim

#endif  // MINKDIM_ERROR_HPP
