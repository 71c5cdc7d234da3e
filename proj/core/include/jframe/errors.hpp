#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jframe {

/// Coarse failure category. Validation failures are caller mistakes
/// (bad input, violated precondition); numerical failures are honest
/// computational breakdowns (iteration caps, non-convergence).
enum class ErrorKind { Validation, Numerical };

/// Single exception type for the whole library. `code()` is a stable
/// machine-readable tag; `what()` carries the human explanation.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_validation(std::string_view code,
                                         const std::string& message) {
  throw Error(ErrorKind::Validation, std::string(code), message);
}

[[noreturn]] inline void fail_numerical(std::string_view code,
                                        const std::string& message) {
  throw Error(ErrorKind::Numerical, std::string(code), message);
}

}  // namespace jframe
