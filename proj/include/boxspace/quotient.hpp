#pragma once

#include <cstdint>
#include <vector>

namespace boxspace {

// A finite group given by its right regular action on generator letters:
// action[l][x] is the index of x * g_l, element 0 is the identity. Letters pair
// up as in Word (2i, 2i+1 mutually inverse).
struct FiniteQuotient {
  std::uint32_t size = 1;
  std::vector<std::vector<std::uint32_t>> action;

  unsigned letters() const { return static_cast<unsigned>(action.size()); }
  unsigned rank() const { return letters() / 2; }

  static FiniteQuotient trivial(unsigned rank);
};

}  // namespace boxspace
