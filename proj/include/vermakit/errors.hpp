#pragma once

#include <stdexcept>
#include <string>

namespace vermakit {

/// Malformed or out-of-range user input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation was violated (CLI exit code 3).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace vermakit
