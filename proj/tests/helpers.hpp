#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "projent/random.hpp"
#include "projent/state.hpp"

namespace projent::testing {

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline PureState bell() { return named_state(NamedKind::bell, 2, {2, 2}); }
inline PureState ghz(int m, int n = 2) { return named_state(NamedKind::ghz, m, std::vector<int>(static_cast<std::size_t>(m), n)); }
inline PureState w_state(int m) { return named_state(NamedKind::w, m, std::vector<int>(static_cast<std::size_t>(m), 2)); }

template <class E>
ErrorCode code_of(E&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::invalid_argument;
}

}  // namespace projent::testing
