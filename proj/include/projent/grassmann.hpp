#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "projent/flattening.hpp"
#include "projent/report.hpp"

namespace projent {

inline constexpr double kMaxCoordinates = 1e6;

// Strictly increasing sequence of 1-based indices; an element of Lambda(r, d).
class IndexTuple {
 public:
  IndexTuple() = default;
  explicit IndexTuple(std::vector<int> entries);
  IndexTuple(std::initializer_list<int> entries) : IndexTuple(std::vector<int>(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<int> entries_;
};

// C(n, k) as a double; exact up to 2^53.
double binomial(long long n, long long k) noexcept;

// All C(d, r) increasing r-tuples of 1..d in lexicographic order.
std::vector<IndexTuple> index_tuples(int r, int d);

// Position of an increasing tuple in the lexicographic order of Lambda(r, d).
std::size_t tuple_rank(std::span<const int> tuple, int d);

// Determinant of a small square matrix by Gaussian elimination with partial
// pivoting; closed forms for sides 1 and 2.
Complex minor_determinant(RowMajorMatrix m);

// Maximal minors of an r x d matrix, stored in lexicographic tuple order.
class PlueckerTable {
 public:
  // Coordinates supplied directly (not necessarily a point of the Grassmannian).
  PlueckerTable(int r, int d, std::vector<Complex> coords, IndexTuple rows_used = {});

  int r() const noexcept { return r_; }
  int d() const noexcept { return d_; }
  const IndexTuple& rows_used() const noexcept { return rows_used_; }
  std::span<const Complex> coords() const noexcept { return coords_; }

  Complex at(const IndexTuple& tuple) const;

  // Bracket value for an arbitrary list of r column indices: zero on a
  // repeated index, otherwise the sorted coordinate times the sign of the
  // sorting permutation.
  Complex bracket(std::span<const int> columns) const;

  // Sum of |P|^2 over all coordinates.
  double squared_norm() const noexcept;

 private:
  int r_;
  int d_;
  IndexTuple rows_used_;
  std::vector<Complex> coords_;
};

// Throws too_many_coordinates when C(d, r) exceeds kMaxCoordinates and
// `force` is false.
PlueckerTable pluecker_table(const Flattening& f, const IndexTuple& rows, bool force = false);

// sum_{t=1}^{r+1} (-1)^t [I, j_t] [J \ j_t], with |I| = r-1 and |J| = r+1.
Complex pluecker_relation(const PlueckerTable& table, const IndexTuple& I, const IndexTuple& J);

// sum_{t=1}^{r+1} (|[I, j_t]|^2 + |[J \ j_t]|^2); the E_{I,J} weight.
double relation_weight(const PlueckerTable& table, const IndexTuple& I, const IndexTuple& J);

// Number of times each |P_K|^2 occurs in the sum of relation_weight over all
// independent admissible pairs (I, J) of Lambda(r-1, d) x Lambda(r+1, d):
// r C(d-1, r) from the [I, j_t] terms plus (d-r) C(d, r-1) from the [J \ j_t]
// terms. The count does not depend on K.
double relation_multiplicity(int r, int d);

// Sum of relation_weight over every admissible (I, J) of a table.
double relation_weight_total(const PlueckerTable& table);

enum class RowPairs { all, first };

// Per-party term of the multi-qubit measure: relation_weight_total over the
// tables of the chosen row pairs of Mat^j.
double pluecker_qubit_contribution(const Flattening& f, RowPairs pairs = RowPairs::all, bool force = false);

// Per-party term of the general measure: relation_weight_total over the
// full-row table of Mat^j (r = N_j).
double pluecker_general_contribution(const Flattening& f, bool force = false);

MeasureReport multiqubit_measure(const PureState& state, double norm_const = 1.0,
                                 RowPairs pairs = RowPairs::all, bool force = false);

MeasureReport general_measure(const PureState& state, double norm_const = 1.0, bool force = false);

}  // namespace projent
