#pragma once

// Test-only reference computations. Each one takes a different route from
// the library code it checks: plain 64-bit loops, explicit matrices and
// linear searches instead of closed forms.

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using Triple = std::array<i64, 3>;

inline i64 gram_pairing(const Triple& d, const Triple& e, i64 g) {
  const i64 gram[3][3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, 2 - 2 * g}};
  i64 sum = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) sum += d[i] * gram[i][j] * e[j];
  }
  return sum;
}

inline bool ample_by_pairing(const Triple& l, i64 g) {
  return gram_pairing(l, {1, 0, 0}, g) > 0 && gram_pairing(l, {0, 1, 0}, g) > 0 &&
         gram_pairing(l, {0, 0, 1}, g) > 0 && gram_pairing(l, l, g) > 0;
}

/// Every (d, m) with d in [1, dmax], m in (d r, d r + span] and
/// m^2 - r m - r(2 + d^2 + d) < 0, found by a blind linear scan.
inline std::vector<std::pair<i64, i64>> feasible_by_scan(i64 r, i64 dmax, i64 span) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 d = 1; d <= dmax; ++d) {
    for (i64 m = d * r + 1; m <= d * r + span; ++m) {
      if (m * m - r * m - r * (2 + d * d + d) < 0) out.emplace_back(d, m);
    }
  }
  return out;
}

inline i64 ceil_by_search(i64 p, i64 q) {
  i64 k = 0;
  while (k * q < p) ++k;
  return k;
}

inline Triple random_triple(std::mt19937_64& rng, i64 bound) {
  std::uniform_int_distribution<i64> dist(-bound, bound);
  return {dist(rng), dist(rng), dist(rng)};
}

}  // namespace oracle
