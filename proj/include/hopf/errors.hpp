#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

/// Malformed or mismatched input (dimensions, indices, schema).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical precondition failed: d^2 != 0, not a chain map, singular form, ...
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// The requested computation is outside what the library implements.
class UnsupportedError : public std::logic_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hopf
