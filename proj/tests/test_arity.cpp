#include "polygrade/arity.hpp"
#include "polygrade/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

using namespace polygrade;

TEST_SUITE("arity") {

TEST_CASE("word length counts arguments of a nested word one application at a time") {
  for (int n = 2; n <= 8; ++n) {
    for (long ell = 0; ell <= 9; ++ell) {
      // One argument to start with; every application swallows n arguments
      // and emits one, so the count grows by n-1.
      long args = 1;
      for (long k = 0; k < ell; ++k) args += n - 1;
      CHECK(word_length(ell, n) == args);
    }
  }
}

TEST_CASE("word length rejects degenerate arity and negative powers") {
  CHECK_THROWS_AS(word_length(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(word_length(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(word_length(-1, 3), std::invalid_argument);
}

TEST_CASE("power recovery inverts word length exactly") {
  for (int n = 2; n <= 8; ++n) {
    for (long ell = 0; ell <= 50; ++ell) {
      CHECK(power_for_length(word_length(ell, n), n) == ell);
    }
  }
}

TEST_CASE("lengths off the arithmetic progression have no power") {
  for (int n = 3; n <= 8; ++n) {
    for (long w = 1; w <= 100; ++w) {
      const bool divisible = (w - 1) % (n - 1) == 0;
      CHECK(power_for_length(w, n).has_value() == divisible);
    }
  }
  CHECK_FALSE(power_for_length(0, 3).has_value());
  CHECK_FALSE(power_for_length(-4, 5).has_value());
}

TEST_CASE("shape conversions agree in both directions") {
  for (int n = 2; n <= 6; ++n) {
    for (long ell = 0; ell <= 6; ++ell) {
      const ArityShape from_power = ArityShape::from_power(n, ell);
      CHECK(from_power.w == word_length(ell, n));
      const auto from_length = ArityShape::from_length(n, from_power.w);
      REQUIRE(from_length.has_value());
      CHECK(*from_length == from_power);
    }
  }
  CHECK_FALSE(ArityShape::from_length(4, 9).has_value());
}

TEST_CASE("coupled-power solutions match the bundled golden table") {
  const auto solutions = solve_higher_power_pairs(5);
  CHECK(solutions == fixtures::higher_power_solution_table());
  REQUIRE(solutions.size() == 8);
  CHECK(solutions.front() == HigherPowerSolution{3, 2, 3, 4, 7});
  CHECK(solutions.back() == HigherPowerSolution{3, 4, 5, 4, 13});
}

TEST_CASE("coupled-power solutions agree with a four-variable scan") {
  for (int max = 3; max <= 7; ++max) {
    // Independent oracle: scan all four variables and keep the tuples that
    // satisfy the equation, instead of solving for one of the powers.
    std::vector<HigherPowerSolution> expected;
    for (int n_gp = 3; n_gp <= max; ++n_gp) {
      for (int n_alg = 3; n_alg <= max; ++n_alg) {
        if (n_gp == n_alg) continue;
        for (long ell_gp = 1; ell_gp <= max; ++ell_gp) {
          for (long ell_alg = 1; ell_alg <= max; ++ell_alg) {
            if (ell_gp * (n_gp - 1) != ell_alg * (n_alg - 1)) continue;
            expected.push_back(HigherPowerSolution{ell_gp, ell_alg, n_gp, n_alg,
                                                   word_length(ell_gp, n_gp)});
          }
        }
      }
    }
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
      return std::tie(a.n_gp, a.n_alg, a.ell_gp) < std::tie(b.n_gp, b.n_alg, b.ell_gp);
    });
    CHECK(solve_higher_power_pairs(max) == expected);
  }
}

TEST_CASE("every solution solves the coupled equation with one shared word length") {
  for (const auto& s : solve_higher_power_pairs(7)) {
    CHECK(s.ell_gp * (s.n_gp - 1) == s.ell_alg * (s.n_alg - 1));
    CHECK(word_length(s.ell_gp, s.n_gp) == s.w);
    CHECK(word_length(s.ell_alg, s.n_alg) == s.w);
    CHECK(s.n_gp != s.n_alg);
  }
}

TEST_CASE("the solver needs room for two distinct arities above 2") {
  CHECK_THROWS_AS(solve_higher_power_pairs(2), std::invalid_argument);
  CHECK_THROWS_AS(solve_higher_power_pairs(0), std::invalid_argument);
}

}  // TEST_SUITE
