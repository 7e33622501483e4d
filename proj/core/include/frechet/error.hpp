#pragma once

#include <stdexcept>
#include <string>

namespace frechet {

enum class errc {
  kind_mismatch,
  dimension_mismatch,
  invalid_point,
  empty_input,
  bad_weights,
  bad_parameter,
  parse_error,
  io_error,
  unsupported,
  config_error,
};

const char* to_string(errc code) noexcept;

/// Structured error: every failure carries a machine-readable code plus a
/// message that names the offending inputs (kinds, dimensions, record index).
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message) {}

  errc code() const noexcept { return code_; }

  /// Message without the code prefix; lets wrappers re-contextualize.
  const std::string& message() const noexcept { return message_; }

 private:
  errc code_;
  std::string message_;
};

}  // namespace frechet
