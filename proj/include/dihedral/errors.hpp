#pragma once

#include <stdexcept>
#include <string>

namespace dihedral {

// Bad user input: malformed syntax, invalid parameters, vectors that fail
// the generating-vector conditions. CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// An internal identity that must hold was violated. CLI exit code 2.
class ConsistencyError : public std::runtime_error {
public:
  ConsistencyError(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

}  // namespace dihedral
