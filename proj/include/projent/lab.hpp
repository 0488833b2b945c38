#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "projent/flattening.hpp"
#include "projent/report.hpp"

namespace projent {

// Deviations below this scale are compared absolutely rather than relatively.
inline constexpr double kRelativeFloor = 1e-6;

// Haar-distributed n x n unitary (QR of a complex Gaussian matrix with the
// phases of R's diagonal folded into Q).
Matrix random_unitary(int n, std::uint64_t seed);

// Complex Gaussian matrix scaled by the principal n-th root of its
// determinant; draws with |det| < 1e-6 are rejected, at most 100 times.
Matrix random_sl(int n, std::uint64_t seed);

struct FilterPair {
  Matrix first;   // sqrt(E)
  Matrix second;  // sqrt(I - E)
};

// Filter pair for E = U diag(eigenvalues) U^dagger, eigenvalues in [0, 1].
FilterPair filter_from_spectrum(const Matrix& basis, const std::vector<double>& eigenvalues);

// E with a Haar eigenbasis and eigenvalues uniform in [0, 1].
FilterPair random_two_outcome_filter(int n, std::uint64_t seed);

MeasureReport evaluate_measure(const PureState& state, MeasureKind kind, double norm_const = 1.0);

// Per-party term of `kind` for one flattening; no normalization requirement.
double term_value(const Flattening& f, MeasureKind kind);

struct InvarianceReport {
  MeasureKind kind;
  std::uint64_t seed;
  int trials;
  double max_abs_dev;
  double max_rel_dev;
  double tol;
  bool pass;
};

struct MonotonicityReport {
  MeasureKind kind;
  std::uint64_t seed;
  double slack;
  int trials;
  int violations;
  double max_violation;
  double mean_drop;
};

// Haar unitaries on every party per trial; compares the total measure.
InvarianceReport lu_invariance(const PureState& state, MeasureKind kind, int trials, std::uint64_t seed,
                               double tol);

// Random SL(N, C) on `party` per trial, amplitudes left unnormalized, and
// the term of `observe_party` (default: `party`) compared before and after.
// Observing a different party is a negative control: the operator then
// mixes columns and the 2x2 minors change.
InvarianceReport sl_term_invariance(const PureState& state, int party, MeasureKind kind, int trials,
                                    std::uint64_t seed, double tol, std::optional<int> observe_party = {});

// Random single-party two-outcome filters; counts trials where
// p1 E(psi1) + p2 E(psi2) > E(psi) + slack.
MonotonicityReport monotonicity_experiment(const PureState& state, MeasureKind kind, int trials,
                                           std::uint64_t seed, double slack = 1e-9);

nlohmann::ordered_json to_json(const InvarianceReport& report);
nlohmann::ordered_json to_json(const MonotonicityReport& report);

}  // namespace projent

namespace projent {

struct RelationSuiteReport {
  int r;
  int d;
  std::uint64_t seed;
  int trials;
  long long relations_checked;
  double max_scaled_residual;  // max |P_{I,J}| / (max |P|)^2
  double tol;
  bool pass;
};

// Every quadratic relation of the Pluecker tables of `trials` complex
// Gaussian r x d matrices.
RelationSuiteReport relation_suite(int r, int d, int trials, std::uint64_t seed, double tol);

nlohmann::ordered_json to_json(const RelationSuiteReport& report);

}  // namespace projent
