#include "polygrade/arity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace polygrade {

long word_length(long ell, int n) {
  if (n < 2) {
    throw std::invalid_argument("word_length: arity must be at least 2, got " +
                                std::to_string(n));
  }
  if (ell < 0) {
    throw std::invalid_argument("word_length: power must be nonnegative, got " +
                                std::to_string(ell));
  }
  return ell * (n - 1) + 1;
}

std::optional<long> power_for_length(long w, int n) {
  if (n < 2) {
    throw std::invalid_argument("power_for_length: arity must be at least 2, got " +
                                std::to_string(n));
  }
  if (w < 1) return std::nullopt;
  if ((w - 1) % (n - 1) != 0) return std::nullopt;
  return (w - 1) / (n - 1);
}

ArityShape ArityShape::from_power(int n, long ell) {
  return ArityShape{n, ell, word_length(ell, n)};
}

std::optional<ArityShape> ArityShape::from_length(int n, long w) {
  auto ell = power_for_length(w, n);
  if (!ell) return std::nullopt;
  return ArityShape{n, *ell, w};
}

std::vector<HigherPowerSolution> solve_higher_power_pairs(int max_value) {
  if (max_value < 3) {
    throw std::invalid_argument("solve_higher_power_pairs: max_value must be at least 3");
  }
  std::vector<HigherPowerSolution> out;
  for (int n_gp = 3; n_gp <= max_value; ++n_gp) {
    for (int n_alg = 3; n_alg <= max_value; ++n_alg) {
      if (n_gp == n_alg) continue;
      for (long ell_gp = 1; ell_gp <= max_value; ++ell_gp) {
        const long w = ell_gp * (n_gp - 1) + 1;
        if ((w - 1) % (n_alg - 1) != 0) continue;
        const long ell_alg = (w - 1) / (n_alg - 1);
        if (ell_alg < 1 || ell_alg > max_value) continue;
        out.push_back({ell_gp, ell_alg, n_gp, n_alg, w});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n_gp, a.n_alg, a.ell_gp) < std::tie(b.n_gp, b.n_alg, b.ell_gp);
  });
  return out;
}

}  // namespace polygrade
