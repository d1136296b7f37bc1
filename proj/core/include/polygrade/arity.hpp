#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace polygrade {

// Admissible word lengths for an n-ary operation are quantized: a tower of
// ell nested applications consumes exactly ell*(n-1)+1 arguments, so no
// other argument count can be expressed.
//
// ell is the polyadic power: ell = 0 is a bare argument, ell = 1 a single
// application, and so on.

// ell*(n-1)+1. Throws std::invalid_argument for n < 2 or ell < 0.
long word_length(long ell, int n);

// Inverse of word_length in ell. nullopt when w is not a quantized length
// for arity n -- an expected outcome, not an error.
std::optional<long> power_for_length(long w, int n);

// Arity, power, and the word length they determine.
struct ArityShape {
  int n = 2;
  long ell = 0;
  long w = 1;

  static ArityShape from_power(int n, long ell);
  static std::optional<ArityShape> from_length(int n, long w);

  friend auto operator<=>(const ArityShape&, const ArityShape&) = default;
};

// One solution of ell_gp*(n_gp - 1) == ell_alg*(n_alg - 1) with
// n_gp != n_alg: a grading-operation power and an algebra power that
// consume words of the same length w.
struct HigherPowerSolution {
  long ell_gp = 0;
  long ell_alg = 0;
  int n_gp = 0;
  int n_alg = 0;
  long w = 0;

  friend auto operator<=>(const HigherPowerSolution&, const HigherPowerSolution&) = default;
};

// All solutions with 1 <= ell <= max_value and 3 <= n <= max_value on both
// sides, sorted by (n_gp, n_alg, ell_gp). Binary operations are excluded:
// every composed power of a binary law is again binary, so the coupled
// word-length equation only constrains genuinely polyadic pairs.
std::vector<HigherPowerSolution> solve_higher_power_pairs(int max_value);

}  // namespace polygrade
