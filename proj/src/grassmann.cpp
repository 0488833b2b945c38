#include "projent/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace projent {

namespace {

std::string describe(std::span<const int> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

void check_within(const IndexTuple& t, int d) {
  if (t.size() > 0 && t[t.size() - 1] > d) {
    throw Error(ErrorCode::bad_order, "tuple " + describe(t.entries()) + " exceeds d = " + std::to_string(d));
  }
}

void check_relation_args(const PlueckerTable& table, const IndexTuple& I, const IndexTuple& J) {
  const auto r = static_cast<std::size_t>(table.r());
  if (table.d() < table.r() + 1) {
    throw Error(ErrorCode::no_admissible_pairs, "d < r + 1: no J tuple fits in 1..d");
  }
  if (I.size() + 1 != r || J.size() != r + 1) {
    throw Error(ErrorCode::bad_arity, "relation needs |I| = r-1 and |J| = r+1 for r = " + std::to_string(r));
  }
  check_within(I, table.d());
  check_within(J, table.d());
}

// Advances an increasing tuple over 1..d to its lexicographic successor.
bool next_tuple(std::vector<int>& t, int d) {
  const int r = static_cast<int>(t.size());
  for (int i = r - 1; i >= 0; --i) {
    if (t[static_cast<std::size_t>(i)] < d - (r - 1 - i)) {
      ++t[static_cast<std::size_t>(i)];
      for (int k = i + 1; k < r; ++k) t[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_tuple(int r) {
  std::vector<int> t(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) t[static_cast<std::size_t>(i)] = i + 1;
  return t;
}

}  // namespace

IndexTuple::IndexTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || (i > 0 && entries_[i] <= entries_[i - 1])) {
      throw Error(ErrorCode::bad_order, "index tuple " + describe(entries_) + " is not a strictly increasing sequence of positive indices");
    }
  }
}

double binomial(long long n, long long k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (long long i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(c);
}

std::vector<IndexTuple> index_tuples(int r, int d) {
  if (r < 1 || r > d) {
    throw Error(ErrorCode::bad_order, "need 1 <= r <= d, got r = " + std::to_string(r) + ", d = " + std::to_string(d));
  }
  std::vector<IndexTuple> out;
  out.reserve(static_cast<std::size_t>(binomial(d, r)));
  auto t = first_tuple(r);
  do {
    out.emplace_back(t);
  } while (next_tuple(t, d));
  return out;
}

std::size_t tuple_rank(std::span<const int> tuple, int d) {
  const auto r = static_cast<long long>(tuple.size());
  double rank = 0.0;
  int prev = 0;
  for (long long i = 0; i < r; ++i) {
    const int v = tuple[static_cast<std::size_t>(i)];
    // Tuples that agree up to position i but hold a smaller value there.
    for (int w = prev + 1; w < v; ++w) rank += binomial(d - w, r - i - 1);
    prev = v;
  }
  return static_cast<std::size_t>(rank);
}

Complex minor_determinant(RowMajorMatrix m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::shape_mismatch, "determinant of a non-square matrix");
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

  Complex det = 1.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    double best = std::abs(m(k, k));
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (const double v = std::abs(m(i, k)); v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      det = -det;
    }
    det *= m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Complex factor = m(i, k) / m(k, k);
      for (Eigen::Index c = k + 1; c < n; ++c) m(i, c) -= factor * m(k, c);
    }
  }
  return det;
}

PlueckerTable::PlueckerTable(int r, int d, std::vector<Complex> coords, IndexTuple rows_used)
    : r_(r), d_(d), rows_used_(std::move(rows_used)), coords_(std::move(coords)) {
  if (r < 1 || r > d) throw Error(ErrorCode::bad_order, "need 1 <= r <= d");
  if (static_cast<double>(coords_.size()) != binomial(d, r)) {
    throw Error(ErrorCode::length_mismatch, "a Pluecker table needs C(d, r) coordinates");
  }
}

Complex PlueckerTable::at(const IndexTuple& tuple) const {
  if (tuple.size() != static_cast<std::size_t>(r_)) throw Error(ErrorCode::bad_arity, "coordinate tuple has wrong length");
  check_within(tuple, d_);
  return coords_[tuple_rank(tuple.entries(), d_)];
}

Complex PlueckerTable::bracket(std::span<const int> columns) const {
  if (columns.size() != static_cast<std::size_t>(r_)) throw Error(ErrorCode::bad_arity, "bracket has wrong length");
  std::vector<int> sorted(columns.begin(), columns.end());
  bool odd = false;
  // Insertion sort, counting transpositions for the sign.
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t k = i; k > 0 && sorted[k - 1] > sorted[k]; --k) {
      std::swap(sorted[k - 1], sorted[k]);
      odd = !odd;
    }
  }
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) return 0.0;
  }
  if (sorted.front() < 1 || sorted.back() > d_) throw Error(ErrorCode::bad_order, "bracket index outside 1..d");
  const Complex p = coords_[tuple_rank(sorted, d_)];
  return odd ? -p : p;
}

double PlueckerTable::squared_norm() const noexcept {
  double s = 0.0;
  for (const auto& p : coords_) s += std::norm(p);
  return s;
}

PlueckerTable pluecker_table(const Flattening& f, const IndexTuple& rows, bool force) {
  const int r = static_cast<int>(rows.size());
  const int d = static_cast<int>(f.cols());
  if (r < 1) throw Error(ErrorCode::bad_order, "row tuple is empty");
  if (rows[rows.size() - 1] > f.rows()) throw Error(ErrorCode::row_out_of_range, "row index beyond the flattening");
  if (r > d) throw Error(ErrorCode::bad_order, "more rows than columns");
  const double count = binomial(d, r);
  if (!force && count > kMaxCoordinates) {
    throw Error(ErrorCode::too_many_coordinates,
                "C(" + std::to_string(d) + "," + std::to_string(r) + ") Pluecker coordinates exceed the cap",
                {f.party});
  }

  std::vector<Complex> coords;
  coords.reserve(static_cast<std::size_t>(count));
  if (r == 2) {
    const auto a = f.entries.row(rows[0] - 1);
    const auto b = f.entries.row(rows[1] - 1);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index k = i + 1; k < d; ++k) coords.push_back(a(i) * b(k) - a(k) * b(i));
    }
  } else {
    RowMajorMatrix sub(r, r);
    auto t = first_tuple(r);
    do {
      for (int i = 0; i < r; ++i) {
        for (int c = 0; c < r; ++c) sub(i, c) = f.entries(rows[static_cast<std::size_t>(i)] - 1, t[static_cast<std::size_t>(c)] - 1);
      }
      coords.push_back(minor_determinant(sub));
    } while (next_tuple(t, d));
  }
  return PlueckerTable(r, d, std::move(coords), rows);
}

Complex pluecker_relation(const PlueckerTable& table, const IndexTuple& I, const IndexTuple& J) {
  check_relation_args(table, I, J);
  const auto r = static_cast<std::size_t>(table.r());
  std::vector<int> left(I.entries().begin(), I.entries().end());
  left.push_back(0);
  std::vector<int> right(r);
  Complex sum = 0.0;
  for (std::size_t t = 0; t <= r; ++t) {
    left.back() = J[t];
    for (std::size_t k = 0, o = 0; k <= r; ++k) {
      if (k != t) right[o++] = J[k];
    }
    // (-1)^t with t counted from 1.
    const Complex term = table.bracket(left) * table.bracket(right);
    sum += (t % 2 == 0) ? -term : term;
  }
  return sum;
}

double relation_weight(const PlueckerTable& table, const IndexTuple& I, const IndexTuple& J) {
  check_relation_args(table, I, J);
  const auto r = static_cast<std::size_t>(table.r());
  std::vector<int> left(I.entries().begin(), I.entries().end());
  left.push_back(0);
  std::vector<int> right(r);
  double sum = 0.0;
  for (std::size_t t = 0; t <= r; ++t) {
    left.back() = J[t];
    for (std::size_t k = 0, o = 0; k <= r; ++k) {
      if (k != t) right[o++] = J[k];
    }
    sum += std::norm(table.bracket(left)) + std::norm(table.bracket(right));
  }
  return sum;
}

double relation_multiplicity(int r, int d) {
  if (r < 1 || d < r + 1) {
    throw Error(ErrorCode::no_admissible_pairs, "no admissible (I, J) for r = " + std::to_string(r) +
                                                    ", d = " + std::to_string(d));
  }
  return r * binomial(d - 1, r) + (d - r) * binomial(d, r - 1);
}

double relation_weight_total(const PlueckerTable& table) {
  return relation_multiplicity(table.r(), table.d()) * table.squared_norm();
}

double pluecker_qubit_contribution(const Flattening& f, RowPairs pairs, bool force) {
  const auto rows = static_cast<int>(f.rows());
  double sum = 0.0;
  for (int mu = 1; mu <= rows; ++mu) {
    for (int nu = mu + 1; nu <= rows; ++nu) {
      sum += relation_weight_total(pluecker_table(f, IndexTuple{mu, nu}, force));
      if (pairs == RowPairs::first) return sum;
    }
  }
  return sum;
}

double pluecker_general_contribution(const Flattening& f, bool force) {
  const auto rows = static_cast<int>(f.rows());
  if (f.cols() < rows + 1) {
    throw Error(ErrorCode::degenerate_shape,
                "party " + std::to_string(f.party) + ": d = " + std::to_string(f.cols()) + " < N + 1", {f.party});
  }
  return relation_weight_total(pluecker_table(f, IndexTuple(first_tuple(rows)), force));
}

namespace {

// d_j for every party without materializing flattenings.
std::vector<long long> complement_dims(const PureState& state) {
  std::vector<long long> out;
  for (int j = 1; j <= state.party_count(); ++j) {
    out.push_back(static_cast<long long>(state.size()) / state.dim(j));
  }
  return out;
}

void check_caps(const PureState& state, bool general, bool force) {
  if (force) return;
  const auto d = complement_dims(state);
  std::vector<int> over;
  for (int j = 1; j <= state.party_count(); ++j) {
    const int r = general ? state.dim(j) : 2;
    if (binomial(d[static_cast<std::size_t>(j - 1)], r) > kMaxCoordinates) over.push_back(j);
  }
  if (!over.empty()) {
    throw Error(ErrorCode::too_many_coordinates, "Pluecker table exceeds 10^6 coordinates; pass force to override",
                std::move(over));
  }
}

}  // namespace

MeasureReport multiqubit_measure(const PureState& state, double norm_const, RowPairs pairs, bool force) {
  if (!state.is_normalized()) throw Error(ErrorCode::not_normalized, "measure needs a normalized state");
  const auto d = complement_dims(state);
  std::vector<int> bad;
  for (int j = 1; j <= state.party_count(); ++j) {
    if (d[static_cast<std::size_t>(j - 1)] < 3) bad.push_back(j);
  }
  if (!bad.empty()) {
    throw Error(ErrorCode::no_admissible_pairs, "complement dimension below 3 for some parties", std::move(bad));
  }
  check_caps(state, false, force);
  std::vector<double> contributions;
  for (int j = 1; j <= state.party_count(); ++j) {
    contributions.push_back(pluecker_qubit_contribution(flatten(state, j), pairs, force));
  }
  return make_report(MeasureKind::pluecker_qubit, norm_const, std::move(contributions));
}

MeasureReport general_measure(const PureState& state, double norm_const, bool force) {
  if (!state.is_normalized()) throw Error(ErrorCode::not_normalized, "measure needs a normalized state");
  const auto d = complement_dims(state);
  std::vector<int> bad;
  for (int j = 1; j <= state.party_count(); ++j) {
    if (d[static_cast<std::size_t>(j - 1)] < state.dim(j) + 1) bad.push_back(j);
  }
  if (!bad.empty()) {
    std::string names;
    for (int j : bad) names += (names.empty() ? "" : ", ") + std::to_string(j);
    throw Error(ErrorCode::degenerate_shape, "d_j < N_j + 1 for parties " + names, std::move(bad));
  }
  check_caps(state, true, force);
  std::vector<double> contributions;
  for (int j = 1; j <= state.party_count(); ++j) {
    contributions.push_back(pluecker_general_contribution(flatten(state, j), force));
  }
  return make_report(MeasureKind::pluecker_general, norm_const, std::move(contributions));
}

}  // namespace projent
