#include "projent/lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projent/grassmann.hpp"
#include "projent/random.hpp"
#include "projent/segre.hpp"

namespace projent {

namespace {

Matrix gaussian_matrix(int n, Rng& rng) {
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) g(i, k) = complex_gaussian(rng);
  }
  return g;
}

void require_trials(int trials) {
  if (trials < 1) throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
}

double relative(double dev, double reference) { return dev / std::max(std::abs(reference), kRelativeFloor); }

}  // namespace

Matrix random_unitary(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "unitary side must be >= 1");
  Rng rng = make_rng(seed);
  const Matrix g = gaussian_matrix(n, rng);
  const Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const auto diag = qr.matrixQR().diagonal();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(diag(k));
    if (mag > 0.0) q.col(k) *= diag(k) / mag;
  }
  return q;
}

Matrix random_sl(int n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "SL side must be >= 2");
  Rng rng = make_rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix g = gaussian_matrix(n, rng);
    const Complex det = g.determinant();
    if (std::abs(det) < 1e-6) continue;
    const Complex root = std::polar(std::pow(std::abs(det), 1.0 / n), std::arg(det) / n);
    g /= root;
    return g;
  }
  throw Error(ErrorCode::invalid_argument, "could not draw a well-conditioned SL matrix");
}

FilterPair filter_from_spectrum(const Matrix& basis, const std::vector<double>& eigenvalues) {
  const Eigen::Index n = basis.rows();
  if (basis.cols() != n || static_cast<Eigen::Index>(eigenvalues.size()) != n) {
    throw Error(ErrorCode::shape_mismatch, "filter basis and spectrum disagree");
  }
  Eigen::VectorXcd root_e(n);
  Eigen::VectorXcd root_rest(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lambda = eigenvalues[static_cast<std::size_t>(k)];
    if (lambda < 0.0 || lambda > 1.0) throw Error(ErrorCode::invalid_argument, "filter eigenvalues must lie in [0, 1]");
    root_e(k) = std::sqrt(lambda);
    root_rest(k) = std::sqrt(1.0 - lambda);
  }
  return {basis * root_e.asDiagonal() * basis.adjoint(), basis * root_rest.asDiagonal() * basis.adjoint()};
}

FilterPair random_two_outcome_filter(int n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "filter side must be >= 2");
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> eigenvalues(static_cast<std::size_t>(n));
  for (auto& e : eigenvalues) e = unit(rng);
  return filter_from_spectrum(random_unitary(n, rng()), eigenvalues);
}

MeasureReport evaluate_measure(const PureState& state, MeasureKind kind, double norm_const) {
  switch (kind) {
    case MeasureKind::segre: return segre_measure(state, norm_const);
    case MeasureKind::pluecker_qubit: return multiqubit_measure(state, norm_const);
    case MeasureKind::pluecker_general: return general_measure(state, norm_const);
  }
  throw Error(ErrorCode::invalid_argument, "unknown measure kind");
}

double term_value(const Flattening& f, MeasureKind kind) {
  switch (kind) {
    case MeasureKind::segre: return segre_contribution(f);
    case MeasureKind::pluecker_qubit: return pluecker_qubit_contribution(f);
    case MeasureKind::pluecker_general: return pluecker_general_contribution(f);
  }
  throw Error(ErrorCode::invalid_argument, "unknown measure kind");
}

InvarianceReport lu_invariance(const PureState& state, MeasureKind kind, int trials, std::uint64_t seed,
                               double tol) {
  require_trials(trials);
  const double before = evaluate_measure(state, kind).total;
  InvarianceReport report{kind, seed, trials, 0.0, 0.0, tol, false};
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(trial));
    PureState current = state;
    for (int j = 1; j <= state.party_count(); ++j) {
      const Matrix u = random_unitary(state.dim(j), derive_seed(trial_seed, static_cast<std::uint64_t>(j)));
      current = apply_local(current, {j, u}).state;
    }
    const double dev = std::abs(evaluate_measure(current, kind).total - before);
    report.max_abs_dev = std::max(report.max_abs_dev, dev);
    report.max_rel_dev = std::max(report.max_rel_dev, relative(dev, before));
  }
  report.pass = report.max_rel_dev < tol;
  return report;
}

InvarianceReport sl_term_invariance(const PureState& state, int party, MeasureKind kind, int trials,
                                    std::uint64_t seed, double tol, std::optional<int> observe_party) {
  require_trials(trials);
  const int observed = observe_party.value_or(party);
  const double before = term_value(flatten(state, observed), kind);
  InvarianceReport report{kind, seed, trials, 0.0, 0.0, tol, false};
  for (int trial = 0; trial < trials; ++trial) {
    const Matrix s = random_sl(state.dim(party), derive_seed(seed, static_cast<std::uint64_t>(trial)));
    const PureState moved = transform_local(state, {party, s});
    const double dev = std::abs(term_value(flatten(moved, observed), kind) - before);
    report.max_abs_dev = std::max(report.max_abs_dev, dev);
    report.max_rel_dev = std::max(report.max_rel_dev, relative(dev, before));
  }
  report.pass = report.max_rel_dev < tol;
  return report;
}

MonotonicityReport monotonicity_experiment(const PureState& state, MeasureKind kind, int trials,
                                           std::uint64_t seed, double slack) {
  require_trials(trials);
  if (!state.is_normalized()) throw Error(ErrorCode::not_normalized, "experiment needs a normalized state");
  const double before = evaluate_measure(state, kind).total;
  MonotonicityReport report{kind, seed, slack, trials, 0, 0.0, 0.0};
  double drop_sum = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    std::uniform_int_distribution<int> pick(1, state.party_count());
    const int party = pick(rng);
    const FilterPair filter = random_two_outcome_filter(state.dim(party), rng());

    double average = 0.0;
    for (const Matrix* a : {&filter.first, &filter.second}) {
      try {
        const auto [post, p] = apply_local(state, {party, *a});
        average += p * evaluate_measure(post, kind).total;
      } catch (const Error& e) {
        // An annihilated outcome carries E = 0.
        if (e.code() != ErrorCode::zero_state) throw;
      }
    }
    const double excess = average - before;
    if (excess > slack) ++report.violations;
    report.max_violation = std::max(report.max_violation, excess);
    drop_sum += before - average;
  }
  report.mean_drop = drop_sum / trials;
  return report;
}

nlohmann::ordered_json to_json(const InvarianceReport& report) {
  return {{"kind", to_string(report.kind)}, {"seed", report.seed},       {"trials", report.trials},
          {"max_abs_dev", report.max_abs_dev}, {"max_rel_dev", report.max_rel_dev}, {"tol", report.tol},
          {"pass", report.pass}};
}

nlohmann::ordered_json to_json(const MonotonicityReport& report) {
  return {{"kind", to_string(report.kind)},
          {"seed", report.seed},
          {"slack", report.slack},
          {"trials", report.trials},
          {"violations", report.violations},
          {"violation_rate", static_cast<double>(report.violations) / report.trials},
          {"max_violation", report.max_violation},
          {"mean_drop", report.mean_drop}};
}

}  // namespace projent

namespace projent {

RelationSuiteReport relation_suite(int r, int d, int trials, std::uint64_t seed, double tol) {
  require_trials(trials);
  if (r < 2 || d < r + 1) throw Error(ErrorCode::no_admissible_pairs, "relations need r >= 2 and d >= r + 1");
  const auto lefts = index_tuples(r - 1, d);
  const auto rights = index_tuples(r + 1, d);
  RelationSuiteReport report{r, d, seed, trials, 0, 0.0, tol, false};
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    RowMajorMatrix m(r, d);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index c = 0; c < d; ++c) m(i, c) = complex_gaussian(rng);
    }
    const Flattening f{1, {r, d}, std::move(m)};
    std::vector<int> all_rows(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) all_rows[static_cast<std::size_t>(i)] = i + 1;
    const PlueckerTable table = pluecker_table(f, IndexTuple(all_rows));
    double scale = 0.0;
    for (const auto& p : table.coords()) scale = std::max(scale, std::abs(p));
    scale *= scale;
    for (const auto& I : lefts) {
      for (const auto& J : rights) {
        const double residual = std::abs(pluecker_relation(table, I, J)) / scale;
        report.max_scaled_residual = std::max(report.max_scaled_residual, residual);
        ++report.relations_checked;
      }
    }
  }
  report.pass = report.max_scaled_residual < tol;
  return report;
}

nlohmann::ordered_json to_json(const RelationSuiteReport& report) {
  return {{"shape", std::to_string(report.r) + "x" + std::to_string(report.d)},
          {"seed", report.seed},
          {"trials", report.trials},
          {"relations_checked", report.relations_checked},
          {"max_scaled_residual", report.max_scaled_residual},
          {"tol", report.tol},
          {"pass", report.pass}};
}

}  // namespace projent
