#pragma once

#include <vector>

#include "projent/flattening.hpp"
#include "projent/report.hpp"

namespace projent {

// Sum over column pairs a < b of |f[nu][a] f[mu][b] - f[nu][b] f[mu][a]|^2,
// for distinct 1-based rows. The sum is symmetric in (nu, mu).
double minor_pair_sum(const Flattening& f, int nu, int mu);

// Sum of minor_pair_sum over every row pair, rows visited mu < nu lexicographically.
double segre_contribution(const Flattening& f);

// E = sqrt(norm_const * sum_j segre_contribution(Mat^j)). Requires a
// normalized state.
MeasureReport segre_measure(const PureState& state, double norm_const = 1.0);

// Flag j is true iff every 2x2 minor of Mat^j vanishes below `tol`, i.e. party
// j is unentangled from the rest.
std::vector<bool> segre_separability(const PureState& state, double tol);

}  // namespace projent
