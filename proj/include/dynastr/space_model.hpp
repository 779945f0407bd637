#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace dynastr {

// Searchable partial sums over m integers summing to M:
// 2m(log2(M/m) + log2 log2 m + c·log2 M / log2 m) bits.
inline double spsi_space_bound(double m, double total, double c = 8.0) {
  if (m < 3 || total < 2) return std::numeric_limits<double>::quiet_NaN();
  return 2.0 * m * (std::log2(total / m) + std::log2(std::log2(m)) + c * std::log2(total) / std::log2(m));
}

// Gap-encoded bitvector of length n with b ones:
// b(log2(n/b) + log2 log2 b + log2 n / log2 b) bits.
inline double gap_space_model(double n, double b) {
  if (b < 3 || n < b) return std::numeric_limits<double>::quiet_NaN();
  return b * (std::log2(n / b) + std::log2(std::log2(b)) + std::log2(n) / std::log2(b));
}

}  // namespace dynastr
