// SPDX-License-Identifier: Apache-2.0

#ifndef BIORTHO_ERRORS_HPP
#define BIORTHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace biortho {

// Argument outside the mathematical domain of an operation (poles,
// unsupported half-line, parameter range of a weight construction, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A value left the representable double range.  Raised instead of silently
// returning inf so callers can widen scaling or truncate tails.
class OverflowSignal : public std::range_error {
 public:
  explicit OverflowSignal(const std::string& what) : std::range_error(what) {}
};

// Recurrence coefficient alpha_n or gamma_n vanished: the third-order
// recurrence does not generate a genuine 2-orthogonal sequence past there.
class RegularityError : public std::runtime_error {
 public:
  RegularityError(const std::string& coeff, long index)
      : std::runtime_error("regularity violation: " + coeff + " vanishes at index " +
                           std::to_string(index)),
        failing_index(index) {}
  long failing_index;
};

// Adaptive integration ran out of panel budget.  Carries the partial value.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double partial, double err)
      : std::runtime_error(what), partial_value(partial), error_estimate(err) {}
  double partial_value;
  double error_estimate;
};

}  // namespace biortho

#endif
