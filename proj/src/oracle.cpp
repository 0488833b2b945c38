#include "projent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "projent/segre.hpp"

namespace projent::oracle {

namespace {

// Every strictly increasing k-subset of 1..d, by recursion.
std::vector<std::vector<int>> subsets(int k, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> grow = [&](int next) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int v = next; v <= d; ++v) {
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
    }
  };
  grow(1);
  return out;
}

bool has_repeat(std::vector<int> t) {
  std::sort(t.begin(), t.end());
  return std::adjacent_find(t.begin(), t.end()) != t.end();
}

// Calls visit(K) for each sorted coordinate tuple appearing in the
// relation-weight sum of an (r, d) table, skipping repeated-index brackets.
template <class Visit>
void for_each_term(int r, int d, Visit visit) {
  const auto left_sets = subsets(r - 1, d);
  const auto right_sets = subsets(r + 1, d);
  for (const auto& I : left_sets) {
    for (const auto& J : right_sets) {
      for (std::size_t t = 0; t < J.size(); ++t) {
        std::vector<int> left = I;
        left.push_back(J[t]);
        if (!has_repeat(left)) {
          std::sort(left.begin(), left.end());
          visit(left);
        }
        std::vector<int> right;
        for (std::size_t k = 0; k < J.size(); ++k) {
          if (k != t) right.push_back(J[k]);
        }
        visit(right);
      }
    }
  }
}

}  // namespace

double purity_identity_residual(const PureState& state, int party) {
  const Flattening f = flatten(state, party);
  const Eigen::Index n = f.rows();
  const Eigen::Index cols = f.cols();
  std::vector<Complex> rho(static_cast<std::size_t>(n * n));
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      Complex s = 0.0;
      for (Eigen::Index c = 0; c < cols; ++c) s += f.entries(a, c) * std::conj(f.entries(b, c));
      rho[static_cast<std::size_t>(a * n + b)] = s;
    }
  }
  double trace = 0.0;
  double trace_sq = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) trace += rho[static_cast<std::size_t>(a * n + a)].real();
  for (const auto& v : rho) trace_sq += std::norm(v);
  return std::abs(segre_contribution(f) - (trace * trace - trace_sq) / 2.0);
}

double brute_minor_sum(const Flattening& f) {
  double sum = 0.0;
  for (Eigen::Index nu = 0; nu < f.rows(); ++nu) {
    for (Eigen::Index mu = 0; mu < nu; ++mu) {
      for (Eigen::Index a = 0; a < f.cols(); ++a) {
        for (Eigen::Index b = a + 1; b < f.cols(); ++b) {
          const Complex m = f.entries(nu, a) * f.entries(mu, b) - f.entries(nu, b) * f.entries(mu, a);
          sum += std::norm(m);
        }
      }
    }
  }
  return sum;
}

Multiplicity pluecker_multiplicity(int r, int d) {
  if (r < 2 || d < r + 1) throw Error(ErrorCode::bad_order, "multiplicity needs r >= 2 and d >= r + 1");
  Multiplicity result;
  for (auto& K : subsets(r, d)) result.counts[K] = 0;
  for_each_term(r, d, [&](const std::vector<int>& K) { ++result.counts[K]; });
  const long long first = result.counts.begin()->second;
  const bool uniform = std::all_of(result.counts.begin(), result.counts.end(),
                                   [first](const auto& kv) { return kv.second == first; });
  if (uniform) result.uniform = first;
  return result;
}

double brute_relation_weight_total(const PlueckerTable& table) {
  const int r = table.r();
  const int d = table.d();
  if (d < r + 1) throw Error(ErrorCode::no_admissible_pairs, "no admissible (I, J)");
  std::map<std::vector<int>, double> weight;
  const auto keys = subsets(r, d);
  for (std::size_t i = 0; i < keys.size(); ++i) weight[keys[i]] = std::norm(table.coords()[i]);
  double sum = 0.0;
  for_each_term(r, d, [&](const std::vector<int>& K) { sum += weight.at(K); });
  return sum;
}

CoincidenceReport coincidence_check(const PureState& state) {
  std::vector<int> bad;
  for (int j = 1; j <= state.party_count(); ++j) {
    if (static_cast<int>(state.size()) / state.dim(j) < 3) bad.push_back(j);
  }
  if (!bad.empty()) throw Error(ErrorCode::degenerate_shape, "coincidence needs d_j >= 3", std::move(bad));
  const MeasureReport segre = segre_measure(state);
  const MeasureReport pluecker = multiqubit_measure(state);
  CoincidenceReport report{{}, 0.0};
  for (int j = 1; j <= state.party_count(); ++j) {
    const int d = static_cast<int>(state.size()) / state.dim(j);
    const long long expected = *pluecker_multiplicity(2, d).uniform;
    CoincidenceEntry entry{j, d, expected, std::nullopt};
    const double s = segre.per_flattening[static_cast<std::size_t>(j - 1)].value;
    if (s > 1e-20) {
      const double ratio = pluecker.per_flattening[static_cast<std::size_t>(j - 1)].value / s;
      entry.ratio = ratio;
      report.max_rel_dev = std::max(report.max_rel_dev, std::abs(ratio - expected) / expected);
    }
    report.parties.push_back(entry);
  }
  return report;
}

}  // namespace projent::oracle
