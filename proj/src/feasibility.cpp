#include "boxspace/feasibility.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "boxspace/errors.hpp"
#include "boxspace/zmod.hpp"

namespace boxspace::feasibility {

TriangleReport triangle_feasible(std::uint64_t q, unsigned k) {
  if (q < 3 || !zmod::is_prime(q)) throw ParameterError("q must be an odd prime");
  if (k == 0) throw ParameterError("k must be >= 1");
  using zmod::u128;
  u128 power = 1;
  for (unsigned i = 0; i < 3 * k + 1; ++i) {
    power *= q;
    if (power > std::numeric_limits<std::uint64_t>::max() / 64)
      throw ResourceError("q^(3k+1) overflows for q = " + std::to_string(q) + ", k = " + std::to_string(k));
  }
  const u128 inner = 3 * static_cast<u128>(k) + 3 + 2 * power;
  TriangleReport r;
  r.q = q;
  r.k = k;
  r.n_min = static_cast<std::uint64_t>(6 * inner);
  r.hypothesis_ok = 18 * (static_cast<u128>(k) + 1) <= r.n_min;
  const u128 exponent = 3 * static_cast<u128>(r.n_min) + inner;
  r.order_exponent = static_cast<std::uint64_t>(exponent);
  r.log10_order = static_cast<double>(exponent) * std::log10(static_cast<double>(q));
  r.beyond_desk_scale = r.log10_order > kDeskLog10;
  return r;
}

}  // namespace boxspace::feasibility
