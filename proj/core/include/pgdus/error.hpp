#pragma once

#include <stdexcept>
#include <string>

namespace pgdus {

// Parameter outside its admissible range (non-positive shape, scale, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation
// (probability not in (0,1), moment order beyond existence, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Sample too small, empty or otherwise unusable for the requested estimator.
class SampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed quantity left its admissible range through round-off.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pgdus
