#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace saddle {

/// Root of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (matvec length, block sizes, m < n, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied value is outside the documented domain (tol <= 0, eta <= 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The dense path was asked for a matrix larger than its configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A block failed its definiteness requirement. `index` and `value` carry the
/// certificate: the failing pivot (or eigenvalue) and where it occurred.
class DefinitenessError : public Error {
 public:
  DefinitenessError(const std::string& what, std::size_t index, double value)
      : Error(what), index_(index), value_(value) {}

  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t index_;
  double value_;
};

/// A theorem's hypothesis does not hold for the given system.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; `line` is 1-based, 0 when not attributable to a line.
class FormatError : public Error {
 public:
  FormatError(const std::string& source, std::size_t line, const std::string& message)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message),
        source_(source),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace saddle
