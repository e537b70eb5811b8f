#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wecopt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (negative frequency,
/// out-of-bounds design, wrong vector length, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The buoy or tether layout is physically impossible.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A malformed input file. `line()` is 1-based; 0 means "whole file".
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// The frequency-domain impedance could not be inverted.
class NumericalError : public Error {
 public:
  NumericalError(double omega, const std::string& message);

  double omega() const { return omega_; }

 private:
  double omega_;
};

/// Invalid optimiser or campaign configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace wecopt
