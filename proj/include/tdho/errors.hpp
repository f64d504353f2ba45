#pragma once

#include <stdexcept>
#include <string>

namespace tdho {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument or time outside the valid domain of a scenario or grid.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation too close to a mass zero, or rho collapsing toward zero.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Boundary data at (or beyond) the first caustic of the kernel.
class CausticError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedScenario : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class GridTooSmall : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class BoundViolation : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdho
