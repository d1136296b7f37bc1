#pragma once

#include "polygrade/graded_algebra.hpp"
#include "polygrade/rational.hpp"

#include <random>
#include <string>
#include <vector>

namespace testsupport {

// Every randomized test draws from a fixed-seed engine so failures replay.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(0x9e3779b97f4a7c15ull ^ salt);
}

inline int draw_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Small nonzero rationals with mixed signs and denominators.
inline polygrade::Rat draw_rat(std::mt19937_64& rng) {
  const int num = draw_int(rng, -6, 6);
  const int den = draw_int(rng, 1, 5);
  polygrade::Rat q(num == 0 ? 1 : num, den);
  q.canonicalize();
  return q;
}

inline polygrade::Vector draw_vector(std::mt19937_64& rng, std::size_t dim) {
  polygrade::Vector v(dim);
  for (auto& q : v) {
    const int num = draw_int(rng, -5, 5);
    const int den = draw_int(rng, 1, 4);
    polygrade::Rat r(num, den);
    r.canonicalize();
    q = r;
  }
  return v;
}

inline std::string str(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace testsupport
