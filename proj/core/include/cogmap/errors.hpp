#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cogmap {

// Root of the error taxonomy. InputError covers bad user-supplied data or
// arguments (CLI exit 1); NumericError covers numerical procedures that
// cannot deliver a result (CLI exit 2).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
  public:
    using Error::Error;
};

class NumericError : public Error {
  public:
    using Error::Error;
};

class SchemaError : public InputError {
  public:
    using InputError::InputError;
};

class DuplicateKeyError : public InputError {
  public:
    using InputError::InputError;
};

class MappingError : public InputError {
  public:
    using InputError::InputError;
};

class DegenerateColumnError : public InputError {
  public:
    using InputError::InputError;
};

class InsufficientDataError : public InputError {
  public:
    using InputError::InputError;
};

class DuplicateEdgeError : public InputError {
  public:
    using InputError::InputError;
};

class UnknownIndicatorError : public InputError {
  public:
    using InputError::InputError;
};

class UnknownEdgeError : public InputError {
  public:
    using InputError::InputError;
};

class EdgeConflictError : public InputError {
  public:
    using InputError::InputError;
};

class DimensionError : public InputError {
  public:
    using InputError::InputError;
};

class ScenarioError : public InputError {
  public:
    using InputError::InputError;
};

// Malformed persisted document; carries the 1-based line where parsing failed.
class FormatError : public InputError {
  public:
    FormatError(const std::string& message, std::size_t line)
        : InputError(message + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_ = 0;
};

// Closed-form weights requested on a model whose adjacency is not a
// certified contraction; carries the estimated spectral radius.
class NotContractiveError : public NumericError {
  public:
    NotContractiveError(const std::string& message, double spectral_radius)
        : NumericError(message), spectral_radius_(spectral_radius) {}
    double spectral_radius() const { return spectral_radius_; }

  private:
    double spectral_radius_ = 0.0;
};

// Spectral-radius estimation did not settle within the iteration budget;
// carries the best bound seen so far.
class SpectralEstimateError : public NumericError {
  public:
    SpectralEstimateError(const std::string& message, double best_bound)
        : NumericError(message), best_bound_(best_bound) {}
    double best_bound() const { return best_bound_; }

  private:
    double best_bound_ = 0.0;
};

} // namespace cogmap
