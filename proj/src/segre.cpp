#include "projent/segre.hpp"

#include <string>

namespace projent {

double minor_pair_sum(const Flattening& f, int nu, int mu) {
  const auto rows = static_cast<int>(f.rows());
  if (nu < 1 || nu > rows || mu < 1 || mu > rows) {
    throw Error(ErrorCode::row_out_of_range, "row pair (" + std::to_string(nu) + "," + std::to_string(mu) +
                                                 ") outside 1.." + std::to_string(rows));
  }
  if (nu == mu) throw Error(ErrorCode::equal_rows, "minor rows must differ");

  const auto top = f.entries.row(nu - 1);
  const auto bottom = f.entries.row(mu - 1);
  const Eigen::Index cols = f.cols();
  double sum = 0.0;
  for (Eigen::Index a = 0; a < cols; ++a) {
    const Complex ta = top(a);
    const Complex ba = bottom(a);
    for (Eigen::Index b = a + 1; b < cols; ++b) {
      sum += std::norm(ta * bottom(b) - top(b) * ba);
    }
  }
  return sum;
}

double segre_contribution(const Flattening& f) {
  const auto rows = static_cast<int>(f.rows());
  double sum = 0.0;
  for (int mu = 1; mu <= rows; ++mu) {
    for (int nu = mu + 1; nu <= rows; ++nu) sum += minor_pair_sum(f, nu, mu);
  }
  return sum;
}

MeasureReport segre_measure(const PureState& state, double norm_const) {
  if (!state.is_normalized()) throw Error(ErrorCode::not_normalized, "segre measure needs a normalized state");
  std::vector<double> contributions;
  for (int j = 1; j <= state.party_count(); ++j) contributions.push_back(segre_contribution(flatten(state, j)));
  return make_report(MeasureKind::segre, norm_const, std::move(contributions));
}

std::vector<bool> segre_separability(const PureState& state, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
  std::vector<bool> flags;
  for (int j = 1; j <= state.party_count(); ++j) {
    flags.push_back(segre_contribution(flatten(state, j)) < tol * tol);
  }
  return flags;
}

}  // namespace projent
