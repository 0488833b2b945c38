#pragma once

// Brute-force reference computations. Nothing here calls into the minor,
// Pluecker-table or multiplicity code it is used to check, apart from the
// quantity under test itself.

#include <map>
#include <optional>
#include <vector>

#include "projent/flattening.hpp"
#include "projent/grassmann.hpp"

namespace projent::oracle {

// |segre term of Mat^j - ((tr rho)^2 - tr rho^2) / 2| with rho = Mat^j Mat^j^dagger
// assembled entry by entry.
double purity_identity_residual(const PureState& state, int party);

// Quadruple loop over rows nu > mu and columns b > a.
double brute_minor_sum(const Flattening& f);

struct Multiplicity {
  std::map<std::vector<int>, long long> counts;  // sorted coordinate tuple -> occurrences
  std::optional<long long> uniform;              // set when every coordinate has the same count
};

// Counts, over every (I, J, t) term of the relation-weight sum, how often
// each |P_K|^2 appears.
Multiplicity pluecker_multiplicity(int r, int d);

// Sum of relation weights over all admissible (I, J), by direct enumeration.
double brute_relation_weight_total(const PlueckerTable& table);

struct CoincidenceEntry {
  int party;
  int d;
  long long expected;            // mult(2, d)
  std::optional<double> ratio;   // unset when the Segre term vanishes
};

struct CoincidenceReport {
  std::vector<CoincidenceEntry> parties;
  double max_rel_dev;
  bool pass(double tol) const { return max_rel_dev < tol; }
};

// Per-party ratio of the Pluecker (all row pairs) term to the Segre term,
// against mult(2, d_j).
CoincidenceReport coincidence_check(const PureState& state);

}  // namespace projent::oracle
