#pragma once

#include <grothkit/ring.hpp>

#include <array>
#include <utility>

namespace testing_helpers {

using grothkit::BetaPoly;
using grothkit::TruncPoly;

inline const BetaPoly b = BetaPoly::beta();

// x_1..x_N in a ring with n_vars variables
template <int N>
std::array<TruncPoly, N> vars(int n_vars, int max_deg) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<TruncPoly, N>{TruncPoly::var(n_vars, max_deg, static_cast<int>(I) + 1)...};
  }(std::make_index_sequence<N>{});
}

inline TruncPoly one(int n_vars, int max_deg) { return TruncPoly::constant(n_vars, max_deg, BetaPoly(1)); }

}  // namespace testing_helpers
