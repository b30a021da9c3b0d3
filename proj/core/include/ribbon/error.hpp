#pragma once

#include <stdexcept>
#include <string>

namespace ribbon {

enum class ErrorKind {
  invalid_input,
  parameter,
  malformed_program,
  closure,
  inconsistency,
  degenerate_diagram,
  layering,
  invalid_diagram,
  not_applicable,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ribbon
