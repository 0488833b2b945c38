#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace projent {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent per-trial streams.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for stream `stream` of a run seeded with `seed`. Streams of the same
// seed never collide for distinct stream ids.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix_seed(mix_seed(seed) ^ stream);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(mix_seed(seed)); }

// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1/2).
inline std::complex<double> complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 0.7071067811865476);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace projent
