#pragma once

#include <cstdint>

namespace boxspace::feasibility {

// Smallest n with 3k + 3 + 2q^(3k+1) <= n/6, and the implied bound
// A_{n,k} <= q^(3n + 3k + 3 + 2q^(3k+1)) on the quotient order.
struct TriangleReport {
  std::uint64_t q = 0;
  unsigned k = 0;
  std::uint64_t n_min = 0;
  bool hypothesis_ok = false;         // 18(k+1) <= n_min
  std::uint64_t order_exponent = 0;   // base-q exponent at n = n_min
  double log10_order = 0;
  bool beyond_desk_scale = false;     // log10_order > kDeskLog10
};

inline constexpr double kDeskLog10 = 12;

TriangleReport triangle_feasible(std::uint64_t q, unsigned k);

}  // namespace boxspace::feasibility
