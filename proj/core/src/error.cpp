#include "mobius/error.hpp"

namespace mobius {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::element_not_in_frame: return "element-not-in-frame";
    case ErrorCode::duplicate_member: return "duplicate-member";
    case ErrorCode::invalid_frame: return "invalid-frame";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::set_mismatch: return "set-mismatch";
    case ErrorCode::frame_mismatch: return "frame-mismatch";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::not_a_partial_order: return "not-a-partial-order";
    case ErrorCode::invalid_bba: return "invalid-bba";
    case ErrorCode::total_conflict: return "total-conflict";
    case ErrorCode::capacity_exceeded: return "capacity-exceeded";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::unsupported_conversion: return "unsupported-conversion";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace mobius
