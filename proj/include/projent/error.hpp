#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace projent {

enum class ErrorCode {
  invalid_argument,
  length_mismatch,
  zero_state,
  not_normalized,
  state_too_large,
  unsupported_shape,
  shape_mismatch,
  party_out_of_range,
  column_out_of_range,
  row_out_of_range,
  equal_rows,
  bad_order,
  bad_arity,
  no_admissible_pairs,
  degenerate_shape,
  too_many_coordinates,
  parse_error,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure in the library is reported through this type. `parties`
// lists offending 1-based party indices where that is meaningful
// (degenerate_shape, no_admissible_pairs).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> parties = {})
      : std::runtime_error(message), code_(code), parties_(std::move(parties)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& parties() const noexcept { return parties_; }

 private:
  ErrorCode code_;
  std::vector<int> parties_;
};

}  // namespace projent
