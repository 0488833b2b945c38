#include "projent/flattening.hpp"

#include <string>

namespace projent {

Flattening flatten(const PureState& state, int party) {
  if (party < 1 || party > state.party_count()) {
    throw Error(ErrorCode::party_out_of_range,
                "party " + std::to_string(party) + " not in 1.." + std::to_string(state.party_count()));
  }
  const auto rows = static_cast<std::size_t>(state.dim(party));
  const std::size_t inner = state.stride(party);
  const std::size_t cols = state.size() / rows;
  const auto amps = state.amps();

  // Amplitude index = outer * (rows * inner) + row * inner + s, and the
  // column of that amplitude is outer * inner + s.
  RowMajorMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t outer = c / inner;
      const std::size_t s = c % inner;
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = amps[outer * rows * inner + r * inner + s];
    }
  }
  return {party, state.dims(), std::move(m)};
}

std::vector<int> column_tuple(const Flattening& f, Eigen::Index col) {
  if (col < 1 || col > f.cols()) {
    throw Error(ErrorCode::column_out_of_range, "column " + std::to_string(col) + " out of range");
  }
  std::vector<int> labels(f.dims.size() - 1);
  auto rest = static_cast<std::size_t>(col - 1);
  std::size_t slot = labels.size();
  for (std::size_t i = f.dims.size(); i-- > 0;) {
    if (static_cast<int>(i) == f.party - 1) continue;
    const auto n = static_cast<std::size_t>(f.dims[i]);
    labels[--slot] = static_cast<int>(rest % n) + 1;
    rest /= n;
  }
  return labels;
}

}  // namespace projent
