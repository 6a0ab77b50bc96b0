/// \file errors.hpp
/// Exception types thrown by the library. Every failure mode that callers
/// can reasonably recover from gets its own type; the CLI maps them to
/// exit codes (configuration errors vs. numerical non-convergence).
#pragma once

#include <stdexcept>
#include <string>

namespace bohmlw {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: a solver or quadrature did not converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid input that violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotOnShell : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonOrthochronous : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotAntisymmetric : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class OnSingularRing : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NodalPoint : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class AtBranchPoint : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class PathThroughBranchPoint : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class StepTooCoarse : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class WeightsNotNormalized : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ZeroAmplitudeAxis : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnequalGamma : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NoRetardedRoot : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateQuartic : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DenominatorVanishes : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BranchAmbiguity : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class FilterStarvation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureNotConverged : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class GridTooSmall : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ConfigError : public InvalidInput {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : InvalidInput("config field '" + field + "': " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace bohmlw
