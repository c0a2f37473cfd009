#include "annulus/errors.hpp"

#include <array>
#include <string_view>

namespace annulus {

namespace {
constexpr std::array<std::string_view, 6> kMalformed = {
    "MalformedArc", "InvalidTriangulation", "MalformedJson", "UnknownField", "MalformedLaurent", "MalformedInput"};
}

ErrorCategory category_of(const std::string& code) {
  for (auto m : kMalformed)
    if (code == m) return ErrorCategory::MalformedInput;
  return ErrorCategory::ContractViolation;
}

void raise(const std::string& code, const std::string& message) {
  throw Error(code, category_of(code), code + ": " + message);
}

}  // namespace annulus
