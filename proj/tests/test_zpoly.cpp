#include "polygrade/blockshift.hpp"
#include "polygrade/errors.hpp"
#include "polygrade/fixtures.hpp"
#include "polygrade/zpoly.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

using namespace polygrade;
namespace fx = polygrade::fixtures;

TEST_SUITE("zpoly") {

TEST_CASE("shape invariants evaluate the closure fractions exactly") {
  const ShapeInvariants bundled = shape_invariants(1, 3, 4, 7);
  CHECK(bundled.I == 1);
  CHECK(bundled.J == 0);
  CHECK(bundled.admissible());

  const ShapeInvariants third = shape_invariants(2, 3, 2, 2);
  CHECK(third.I == Rat(2, 3));
  CHECK(third.J == Rat(2, 3));
  CHECK_FALSE(third.admissible());

  const ShapeInvariants fives = shape_invariants(3, 5, 6, 5);
  CHECK(fives.I == 3);
  CHECK(fives.J == 48);
  CHECK(fives.admissible());
}

TEST_CASE("invalid shapes are rejected naming the offending fractions") {
  try {
    PolyadicIntegerRing::make(2, 3, 2, 2);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("2/3") != std::string::npos);
    CHECK(what.find("nonnegative integers") != std::string::npos);
  }
  CHECK_THROWS_AS(PolyadicIntegerRing::make(1, 3, 3, 5), ValidationError);
}

TEST_CASE("minimal arities follow the congruence conditions") {
  // I = (a/b)(m-1) integral needs b | a(m-1); J needs a^(n-1) = 1 mod b
  // (after clearing the common factor), so the answers are order
  // computations in (Z/b)*.
  const MinimalArities two_thirds = minimal_arities(2, 3);
  CHECK(two_thirds.m_add == 4);
  CHECK(two_thirds.n_mul == 3);

  const MinimalArities three_fifths = minimal_arities(3, 5);
  CHECK(three_fifths.m_add == 6);
  CHECK(three_fifths.n_mul == 5);

  const MinimalArities ones = minimal_arities(1, 3);
  CHECK(ones.m_add == 4);
  CHECK(ones.n_mul == 2);

  const MinimalArities whole = minimal_arities(5, 1);
  CHECK(whole.m_add == 2);
  CHECK(whole.n_mul == 2);
}

TEST_CASE("minimal arities report the cap when nothing closes") {
  // 2 mod 4: J = (1/2)(2^(n-1) - 1) is never integral -- odd numerator.
  const MinimalArities stuck = minimal_arities(2, 4, 16);
  CHECK(stuck.m_add == 3);
  CHECK_FALSE(stuck.n_mul.has_value());
  CHECK(stuck.cap == 16);
}

TEST_CASE("the minimal pair is admissible and smaller arities are not") {
  for (long a = 0; a <= 6; ++a) {
    for (long b = 1; b <= 6; ++b) {
      const MinimalArities minimal = minimal_arities(a, b, 64);
      if (minimal.m_add) {
        const Rat i_val = shape_invariants(a, b, *minimal.m_add, 2).I;
        CHECK(rat_is_integral(i_val));
        for (int m = 2; m < *minimal.m_add; ++m) {
          CHECK_FALSE(rat_is_integral(shape_invariants(a, b, m, 2).I));
        }
      }
      if (minimal.n_mul) {
        const Rat j_val = shape_invariants(a, b, 2, *minimal.n_mul).J;
        CHECK(rat_is_integral(j_val));
        CHECK(j_val >= 0);
      }
    }
  }
}

TEST_CASE("membership and representatives walk the congruence class") {
  const PolyadicIntegerRing ring = fx::bundled_4_7_ring();
  CHECK(ring.residue() == 1);
  CHECK(ring.modulus() == 3);
  CHECK(ring.add_arity() == 4);
  CHECK(ring.mul_arity() == 7);
  CHECK(ring.contains(1));
  CHECK(ring.contains(4));
  CHECK(ring.contains(-2));
  CHECK_FALSE(ring.contains(0));
  CHECK_FALSE(ring.contains(2));
  for (long k = -5; k <= 5; ++k) {
    CHECK(ring.representative(k) == 1 + 3 * k);
    CHECK(ring.contains(ring.representative(k)));
  }
}

TEST_CASE("ring sums and products agree with plain integer arithmetic") {
  const PolyadicIntegerRing ring = fx::bundled_4_7_ring();
  const std::vector<Int> addends{1, 4, -2, 7};
  CHECK(ring.add(addends) == 10);
  std::vector<Int> factors(7, Int(1));
  factors[0] = 4;
  factors[1] = -2;
  CHECK(ring.mul(factors) == -8);
  CHECK(ring.contains(-8));
}

TEST_CASE("operations validate argument counts and membership") {
  const PolyadicIntegerRing ring = fx::bundled_4_7_ring();
  CHECK_THROWS_AS(ring.add(std::vector<Int>{1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(ring.add(std::vector<Int>{1, 4, 7, 2}), std::invalid_argument);
  std::vector<Int> factors(7, Int(1));
  factors[3] = 3;
  CHECK_THROWS_AS(ring.mul(factors), std::invalid_argument);
}

TEST_CASE("closure holds on sampled members for several shapes") {
  auto rng = testsupport::make_rng(7);
  const std::vector<PolyadicIntegerRing> rings{
      fx::bundled_4_7_ring(), PolyadicIntegerRing::make(2, 3, 4, 3),
      PolyadicIntegerRing::make(3, 5, 6, 5), PolyadicIntegerRing::make(0, 1, 2, 2)};
  for (const auto& ring : rings) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Int> addends;
      for (int i = 0; i < ring.add_arity(); ++i) {
        addends.push_back(ring.representative(testsupport::draw_int(rng, -10, 10)));
      }
      CHECK(ring.contains(ring.add(addends)));
      std::vector<Int> factors;
      for (int i = 0; i < ring.mul_arity(); ++i) {
        factors.push_back(ring.representative(testsupport::draw_int(rng, -10, 10)));
      }
      CHECK(ring.contains(ring.mul(factors)));
    }
  }
}

TEST_CASE("the additive querelement solves the uniform-sum equation") {
  const PolyadicIntegerRing ring = fx::bundled_4_7_ring();
  for (long k = -5; k <= 5; ++k) {
    const Int y = ring.representative(k);
    const Int quer = ring.additive_querelement(y);
    CHECK(quer == y * (2 - 4));
    CHECK(ring.contains(quer));
    std::vector<Int> word(3, y);
    word.push_back(quer);
    CHECK(ring.add(word) == y);
  }
}

TEST_CASE("the polynomial grading ring is the class 1 mod (n-1) for every arity") {
  for (int n = 2; n <= 8; ++n) {
    for (int n_mul = 2; n_mul <= 8; ++n_mul) {
      const PolyadicIntegerRing ring = grading_ring_for_polynomials(n, n_mul);
      CHECK(ring.residue() == 1);
      CHECK(ring.modulus() == n - 1);
      CHECK(ring.add_arity() == n);
      CHECK(ring.mul_arity() == n_mul);
      CHECK(ring.invariants().I == 1);
      CHECK(ring.invariants().J == 0);
    }
  }
  const PolyadicIntegerRing bundled = fx::bundled_4_7_ring();
  const PolyadicIntegerRing derived = grading_ring_for_polynomials(4, 7);
  CHECK(derived.residue() == bundled.residue());
  CHECK(derived.modulus() == bundled.modulus());
  CHECK(derived.add_arity() == bundled.add_arity());
  CHECK(derived.mul_arity() == bundled.mul_arity());
}

TEST_CASE("every admissible exponent is a ring member and vice versa up to 60") {
  const PolyadicIntegerRing ring = grading_ring_for_polynomials(4, 2);
  for (long d = 1; d <= 60; ++d) {
    CHECK(BlockShiftMonomial{4, Rat(1), d}.admissible() == ring.contains(d));
  }
}

TEST_CASE("the bundled polynomial grades against the bundled ring") {
  const PolynomialGradingReport report =
      check_polynomial_grading(fx::bundled_4ary_polynomial(), fx::bundled_4_7_ring());
  CHECK(report.ok());
  CHECK(report.entries.size() == 256);
  CHECK_FALSE(report.power_rule_note.empty());
  CHECK(report.power_rule_note.find("+ 1") != std::string::npos);

  bool found = false;
  for (const auto& e : report.entries) {
    if (e.exponents == std::vector<long>{7, 10, 16, 19}) {
      found = true;
      CHECK(e.lhs_exponent == 52);
      CHECK(e.rhs_sum == 52);
      CHECK(e.power == 17);
      CHECK(e.ok);
    }
  }
  CHECK(found);
}

TEST_CASE("random admissible polynomials always grade consistently") {
  auto rng = testsupport::make_rng(8);
  for (int n : {2, 3, 4, 5}) {
    const PolyadicIntegerRing ring = grading_ring_for_polynomials(n, 3);
    for (int trial = 0; trial < 5; ++trial) {
      std::map<long, Rat> terms;
      const int count = testsupport::draw_int(rng, 1, 4);
      for (int t = 0; t < count; ++t) {
        const long ell = testsupport::draw_int(rng, 0, 8);
        terms[monomial_degree(ell, n)] = testsupport::draw_rat(rng);
      }
      const MatrixPolynomial poly = MatrixPolynomial::make(n, Rat(0), std::move(terms));
      CHECK(check_polynomial_grading(poly, ring).ok());
    }
  }
}

TEST_CASE("grading rejects mismatched arities and stray exponents up front") {
  const MatrixPolynomial poly = fx::bundled_4ary_polynomial();
  CHECK_THROWS_AS(check_polynomial_grading(poly, grading_ring_for_polynomials(3, 7)),
                  std::invalid_argument);
  const MatrixPolynomial stray = MatrixPolynomial::make(4, Rat(0), {{5, Rat(1)}});
  CHECK_THROWS_AS(check_polynomial_grading(stray, fx::bundled_4_7_ring()),
                  std::invalid_argument);
}

TEST_CASE("exhaustive exponent tuples respect the budget") {
  const EvalBudget tiny{16};
  CHECK_THROWS_AS(
      check_polynomial_grading(fx::bundled_4ary_polynomial(), fx::bundled_4_7_ring(), tiny),
      BudgetExceeded);
}

}  // TEST_SUITE
