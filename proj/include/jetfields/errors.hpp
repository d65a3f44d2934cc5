#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetfields {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Variable-count or matrix-size mismatch, or a variable index out of range.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Not enough precision left for the requested operation, or an attempt to
/// compare jets whose truncation orders differ.
class PrecisionError : public Error {
public:
  using Error::Error;
};

/// An argument outside the mathematical domain of the operation: a non-unit
/// to invert, an image outside the maximal ideal, a singular linear part.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed text input. `position` is a 0-based character offset.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Rejected verification-suite configuration.
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace jetfields
