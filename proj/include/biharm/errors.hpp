#pragma once

#include <stdexcept>
#include <string>

namespace biharm {

/// Raised when an argument lies outside the domain where a quantity is defined
/// (r outside [1, t], t below the modulus guard, z = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when the 4x4 boundary system cannot be solved.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace biharm
