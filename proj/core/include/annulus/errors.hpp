#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

enum class ErrorCategory { MalformedInput, ContractViolation };

class Error : public std::runtime_error {
public:
  Error(std::string code, ErrorCategory category, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)), category_(category) {}

  const std::string& code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_; }
  int exit_code() const noexcept { return category_ == ErrorCategory::MalformedInput ? 2 : 3; }

private:
  std::string code_;
  ErrorCategory category_;
};

[[noreturn]] void raise(const std::string& code, const std::string& message);

ErrorCategory category_of(const std::string& code);

}  // namespace annulus
