#pragma once

#include <stdexcept>
#include <string>

namespace fourlines {

/// A continued fraction that runs into a zero denominator.
class DegenerateChain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadratic form that is required to be positive definite but is not.
class NotPositiveDefinite : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A surface configuration that cannot describe a Picard-rank-one surface.
class InvalidConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace fourlines
