#pragma once

#include <stdexcept>
#include <string>

namespace polyexp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or invalid input: bad files, bad dimensions, bad flags.
/// The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A command was asked to run on inputs that violate the hypotheses of the
/// analysis it implements (or require a mode that was not enabled).
/// The CLI maps this to exit code 1.
class AnalysisRefusal : public Error {
 public:
  explicit AnalysisRefusal(const std::string& what) : Error(what) {}
};

}  // namespace polyexp
