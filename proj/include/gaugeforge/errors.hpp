#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaugeforge {

/// Base for all errors raised by the engine.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division (or negative integer power) where the denominator value is
/// below the division epsilon.
class DivisionByZeroValue : public Error {
 public:
  explicit DivisionByZeroValue(const std::string& what = "division by zero value")
      : Error(what) {}
};

/// A derivative was requested from a jet that does not carry that order.
class OrderExhausted : public Error {
 public:
  explicit OrderExhausted(const std::string& what = "jet order exhausted")
      : Error(what) {}
};

/// Expression parse failure. Carries the byte offset of the offending
/// token and the set of tokens that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& detail);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Vector/matrix sizes do not agree.
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what = "dimension mismatch")
      : Error(what) {}
};

/// A matrix required to be Hermitian is not, beyond tolerance.
class NotHermitian : public Error {
 public:
  explicit NotHermitian(const std::string& what = "matrix is not Hermitian")
      : Error(what) {}
};

/// The gauge-field transformation rule is undefined at zero coupling.
class ZeroCoupling : public Error {
 public:
  explicit ZeroCoupling(const std::string& what = "coupling constant g must be nonzero")
      : Error(what) {}
};

/// Configuration document rejected. `pointer` is a JSON pointer to the
/// offending field.
class ConfigError : public Error {
 public:
  ConfigError(std::string pointer, const std::string& detail);
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace gaugeforge
