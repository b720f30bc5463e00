#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mobius {

enum class ErrorCode {
  element_not_in_frame,
  duplicate_member,
  invalid_frame,
  dimension_mismatch,
  set_mismatch,
  frame_mismatch,
  index_out_of_range,
  not_a_partial_order,
  invalid_bba,
  total_conflict,
  capacity_exceeded,
  parse_error,
  unsupported_conversion,
  io_error,
};

// Stable machine-readable name, used as the CLI diagnostic prefix.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mobius
