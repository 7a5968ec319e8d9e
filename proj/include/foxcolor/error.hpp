#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foxcolor {

enum class ErrorKind {
  MalformedToken,
  LabelArityError,
  SignConflict,
  EmptyCode,
  NotAlternating,
  NotSquare,
  IndexOutOfRange,
  CompositeModulus,
  MalformedTable,
  SearchSpaceTooLarge,
  TooSmall,
  NotEulerian,
  Disconnected,
  TooLarge,
  PremiseViolation,
  GenerationExhausted,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` distinguishes the cases.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace foxcolor
