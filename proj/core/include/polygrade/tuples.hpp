#pragma once

#include <cstddef>
#include <vector>

namespace polygrade {

// Advances t to the next tuple over {0,...,base-1}^k in lexicographic
// order (rightmost position fastest); returns false after the last tuple.
// Start from the all-zero tuple to enumerate the full cube.
inline bool next_tuple(std::vector<int>& t, int base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

// Same, with a per-position mixed radix.
inline bool next_tuple(std::vector<int>& t, const std::vector<int>& bases) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < bases[i]) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace polygrade
