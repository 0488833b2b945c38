#pragma once

#include <vector>

#include "projent/state.hpp"

namespace projent {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Mode-j matricization: rows follow party j's label, columns enumerate the
// surviving labels lexicographically with the last surviving party fastest.
struct Flattening {
  int party;                // 1-based
  std::vector<int> dims;    // dimensions of the source state
  RowMajorMatrix entries;   // dims[party-1] x prod(other dims)

  Eigen::Index rows() const noexcept { return entries.rows(); }
  Eigen::Index cols() const noexcept { return entries.cols(); }
};

Flattening flatten(const PureState& state, int party);

// 1-based labels of the surviving parties (in party order) for 1-based column `col`.
std::vector<int> column_tuple(const Flattening& f, Eigen::Index col);

}  // namespace projent
