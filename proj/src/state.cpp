#include "projent/state.hpp"

#include <cmath>
#include <cstdio>
#include <algorithm>

#include <json.hpp>

#include "projent/random.hpp"

namespace projent {

namespace {

void rescale(std::vector<Complex>& amps, double norm_sq) {
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amps) a *= inv;
}

double squared_norm(std::span<const Complex> amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

}  // namespace

double PureState::norm_squared() const noexcept { return squared_norm(amps_); }

std::size_t PureState::stride(int party) const {
  if (party < 1 || party > party_count()) {
    throw Error(ErrorCode::party_out_of_range, "party " + std::to_string(party) + " out of range");
  }
  std::size_t s = 1;
  for (std::size_t i = static_cast<std::size_t>(party); i < dims_.size(); ++i) {
    s *= static_cast<std::size_t>(dims_[i]);
  }
  return s;
}

Complex PureState::amplitude(std::span<const int> labels) const {
  if (labels.size() != dims_.size()) {
    throw Error(ErrorCode::length_mismatch, "label tuple has wrong length");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (labels[i] < 1 || labels[i] > dims_[i]) {
      throw Error(ErrorCode::invalid_argument, "label out of range");
    }
    index = index * static_cast<std::size_t>(dims_[i]) + static_cast<std::size_t>(labels[i] - 1);
  }
  return amps_[index];
}

PureState detail_make_unchecked(std::vector<int> dims, std::vector<Complex> amps, bool normalized) {
  return PureState(std::move(dims), std::move(amps), normalized);
}

std::size_t validate_dims(std::span<const int> dims) {
  if (dims.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "a state needs at least two parties");
  }
  std::size_t total = 1;
  for (int n : dims) {
    if (n < 2) throw Error(ErrorCode::invalid_argument, "party dimensions must be >= 2");
    total *= static_cast<std::size_t>(n);
    if (total > kMaxAmplitudes) {
      throw Error(ErrorCode::state_too_large, "state exceeds 2^24 amplitudes");
    }
  }
  return total;
}

PureState make_state(std::vector<int> dims, std::vector<Complex> amps, bool normalize) {
  const std::size_t total = validate_dims(dims);
  if (amps.size() != total) {
    throw Error(ErrorCode::length_mismatch, "expected " + std::to_string(total) + " amplitudes, got " +
                                                std::to_string(amps.size()));
  }
  bool any = false;
  for (const auto& a : amps) {
    if (std::abs(a) >= kZeroAmplitude) {
      any = true;
      break;
    }
  }
  if (!any) throw Error(ErrorCode::zero_state, "all amplitudes vanish");

  const double norm_sq = squared_norm(amps);
  if (normalize) {
    rescale(amps, norm_sq);
  } else if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::not_normalized, "squared norm is " + std::to_string(norm_sq));
  }
  return detail_make_unchecked(std::move(dims), std::move(amps), true);
}

NamedKind parse_named_kind(std::string_view name) {
  if (name == "bell") return NamedKind::bell;
  if (name == "ghz") return NamedKind::ghz;
  if (name == "w") return NamedKind::w;
  if (name == "product" || name == "product-basis") return NamedKind::product_basis;
  throw Error(ErrorCode::invalid_argument, "unknown state kind '" + std::string(name) + "'");
}

PureState named_state(NamedKind kind, int parties, std::vector<int> dims) {
  if (parties != static_cast<int>(dims.size())) {
    throw Error(ErrorCode::unsupported_shape, "party count does not match dimension list");
  }
  const std::size_t total = validate_dims(dims);
  std::vector<Complex> amps(total);
  const auto all_equal = [&](int n) {
    return std::all_of(dims.begin(), dims.end(), [n](int d) { return d == n; });
  };

  switch (kind) {
    case NamedKind::bell:
      if (dims != std::vector<int>{2, 2}) {
        throw Error(ErrorCode::unsupported_shape, "bell requires dims [2,2]");
      }
      [[fallthrough]];
    case NamedKind::ghz: {
      if (!all_equal(dims.front())) {
        throw Error(ErrorCode::unsupported_shape, "ghz requires equal dimensions");
      }
      // |k,k,...,k> sits at k * (1 + N + N^2 + ...).
      const std::size_t n = static_cast<std::size_t>(dims.front());
      std::size_t step = 0;
      for (std::size_t i = 0, p = 1; i < dims.size(); ++i, p *= n) step += p;
      const double a = 1.0 / std::sqrt(static_cast<double>(n));
      for (std::size_t k = 0; k < n; ++k) amps[k * step] = a;
      break;
    }
    case NamedKind::w: {
      if (!all_equal(2)) throw Error(ErrorCode::unsupported_shape, "w requires qubit parties");
      const double a = 1.0 / std::sqrt(static_cast<double>(parties));
      for (int p = 0; p < parties; ++p) amps[std::size_t{1} << p] = a;
      break;
    }
    case NamedKind::product_basis:
      amps[0] = 1.0;
      break;
  }
  return detail_make_unchecked(std::move(dims), std::move(amps), true);
}

PureState random_state(std::vector<int> dims, std::uint64_t seed) {
  const std::size_t total = validate_dims(dims);
  Rng rng = make_rng(seed);
  std::vector<Complex> amps(total);
  for (auto& a : amps) a = complex_gaussian(rng);
  return make_state(std::move(dims), std::move(amps), true);
}

PureState product_state(std::span<const std::vector<Complex>> factors) {
  std::vector<int> dims;
  for (const auto& f : factors) dims.push_back(static_cast<int>(f.size()));
  validate_dims(dims);
  std::vector<Complex> amps{Complex{1.0}};
  for (const auto& f : factors) {
    std::vector<Complex> next;
    next.reserve(amps.size() * f.size());
    for (const auto& a : amps) {
      for (const auto& b : f) next.push_back(a * b);
    }
    amps = std::move(next);
  }
  return make_state(std::move(dims), std::move(amps), true);
}

PureState transform_local(const PureState& state, const LocalOperator& op) {
  if (op.party < 1 || op.party > state.party_count()) {
    throw Error(ErrorCode::party_out_of_range, "operator party out of range");
  }
  const auto n = static_cast<Eigen::Index>(state.dim(op.party));
  if (op.matrix.rows() != n || op.matrix.cols() != n) {
    throw Error(ErrorCode::shape_mismatch, "operator side does not match party dimension");
  }
  const std::size_t inner = state.stride(op.party);
  const std::size_t block = inner * static_cast<std::size_t>(n);
  const auto in = state.amps();
  std::vector<Complex> out(in.size());

  for (std::size_t base = 0; base < in.size(); base += block) {
    for (std::size_t s = 0; s < inner; ++s) {
      for (Eigen::Index a = 0; a < n; ++a) {
        Complex acc{};
        for (Eigen::Index b = 0; b < n; ++b) {
          acc += op.matrix(a, b) * in[base + static_cast<std::size_t>(b) * inner + s];
        }
        out[base + static_cast<std::size_t>(a) * inner + s] = acc;
      }
    }
  }
  const bool normalized = state.is_normalized() && std::abs(squared_norm(out) - 1.0) <= kNormTolerance;
  return detail_make_unchecked(state.dims(), std::move(out), normalized);
}

LocalResult apply_local(const PureState& state, const LocalOperator& op) {
  PureState raw = transform_local(state, op);
  const double weight = raw.norm_squared();
  if (weight < kZeroWeight) throw Error(ErrorCode::zero_state, "operator annihilates the state");
  std::vector<Complex> amps(raw.amps().begin(), raw.amps().end());
  rescale(amps, weight);
  return {detail_make_unchecked(raw.dims(), std::move(amps), true), weight};
}

std::string to_json(const PureState& state) {
  std::string out = "{\"dims\":[";
  for (std::size_t i = 0; i < state.dims().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(state.dims()[i]);
  }
  out += "],\"amps\":[";
  char buf[64];
  bool first = true;
  for (const auto& a : state.amps()) {
    std::snprintf(buf, sizeof buf, "%s[%.17g,%.17g]", first ? "" : ",", a.real(), a.imag());
    out += buf;
    first = false;
  }
  out += "]}\n";
  return out;
}

PureState state_from_json(std::string_view text, bool normalize) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  try {
    auto dims = doc.at("dims").get<std::vector<int>>();
    const auto& raw = doc.at("amps");
    if (!raw.is_array()) throw Error(ErrorCode::parse_error, "amps must be an array");
    std::vector<Complex> amps;
    amps.reserve(raw.size());
    for (const auto& pair : raw) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorCode::parse_error, "each amplitude must be a [re, im] pair");
      }
      amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return make_state(std::move(dims), std::move(amps), normalize);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

}  // namespace projent
