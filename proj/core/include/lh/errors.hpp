#pragma once

#include <stdexcept>

namespace lh {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Valid input the implementation deliberately does not handle.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation point too close to a coefficient singularity (sin theta^c = 0).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace lh
