#pragma once

#include <stdexcept>
#include <string>

namespace prcmap {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input data (bad record, dangling reference,
/// invariant violation). CLI exit code 2.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A pipeline stage failed for a non-validation reason. CLI exit code 3.
class StageError : public Error {
 public:
  explicit StageError(const std::string& what) : Error(what) {}
};

/// An iterative fit diverged or exceeded its iteration budget. CLI exit code 4.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

}  // namespace prcmap
