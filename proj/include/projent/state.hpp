#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "projent/error.hpp"

namespace projent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kZeroAmplitude = 1e-300;
inline constexpr double kZeroWeight = 1e-24;
inline constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 24;

// Dense pure state of m >= 2 parties. Amplitudes are stored in lexicographic
// order of the basis labels (k_1, ..., k_m) with the last party fastest.
// Party indices at every interface are 1-based.
class PureState {
 public:
  const std::vector<int>& dims() const noexcept { return dims_; }
  std::span<const Complex> amps() const noexcept { return amps_; }
  int party_count() const noexcept { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_.at(static_cast<std::size_t>(party - 1)); }
  std::size_t size() const noexcept { return amps_.size(); }
  bool is_normalized() const noexcept { return normalized_; }
  double norm_squared() const noexcept;

  // Amplitude for a 1-based label tuple.
  Complex amplitude(std::span<const int> labels) const;

  // Product of the dimensions of parties after `party` (the index stride).
  std::size_t stride(int party) const;

 private:
  friend PureState detail_make_unchecked(std::vector<int>, std::vector<Complex>, bool);

  PureState(std::vector<int> dims, std::vector<Complex> amps, bool normalized)
      : dims_(std::move(dims)), amps_(std::move(amps)), normalized_(normalized) {}

  std::vector<int> dims_;
  std::vector<Complex> amps_;
  bool normalized_;
};

// Internal: builds a state after the caller has validated shape and flag.
PureState detail_make_unchecked(std::vector<int> dims, std::vector<Complex> amps, bool normalized);

// Throws invalid_argument / state_too_large for bad shapes; returns the
// product of the dimensions.
std::size_t validate_dims(std::span<const int> dims);

PureState make_state(std::vector<int> dims, std::vector<Complex> amps, bool normalize);

enum class NamedKind { bell, ghz, w, product_basis };

NamedKind parse_named_kind(std::string_view name);

PureState named_state(NamedKind kind, int parties, std::vector<int> dims);

// Haar-uniform on the unit sphere of the full space.
PureState random_state(std::vector<int> dims, std::uint64_t seed);

// Normalized tensor product of single-party vectors.
PureState product_state(std::span<const std::vector<Complex>> factors);

struct LocalOperator {
  int party;  // 1-based
  Matrix matrix;
};

struct LocalResult {
  PureState state;
  double weight;  // squared norm after the operator, before renormalization
};

// Applies the operator to the party's index only, without renormalizing.
// The result is flagged normalized only if the input was and the operator
// kept the norm within kNormTolerance.
PureState transform_local(const PureState& state, const LocalOperator& op);

// transform_local followed by renormalization. Throws zero_state when the
// weight falls below kZeroWeight.
LocalResult apply_local(const PureState& state, const LocalOperator& op);

// Canonical JSON: {"dims":[...],"amps":[[re,im],...]} at 17 significant digits.
std::string to_json(const PureState& state);

// Strict parser; wrong-length amplitude lists are rejected. Without
// `normalize` the amplitudes must already have unit norm.
PureState state_from_json(std::string_view text, bool normalize = false);

}  // namespace projent
