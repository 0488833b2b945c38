#include "projent/error.hpp"

namespace projent {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::zero_state: return "ZeroState";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::state_too_large: return "StateTooLarge";
    case ErrorCode::unsupported_shape: return "UnsupportedShape";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::party_out_of_range: return "PartyOutOfRange";
    case ErrorCode::column_out_of_range: return "ColumnOutOfRange";
    case ErrorCode::row_out_of_range: return "RowOutOfRange";
    case ErrorCode::equal_rows: return "EqualRows";
    case ErrorCode::bad_order: return "BadOrder";
    case ErrorCode::bad_arity: return "BadArity";
    case ErrorCode::no_admissible_pairs: return "NoAdmissiblePairs";
    case ErrorCode::degenerate_shape: return "DegenerateShape";
    case ErrorCode::too_many_coordinates: return "TooManyCoordinates";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace projent
