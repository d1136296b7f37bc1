#include "polygrade/errors.hpp"
#include "polygrade/fixtures.hpp"
#include "polygrade/graded_algebra.hpp"
#include "polygrade/tuples.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

using namespace polygrade;
namespace fx = polygrade::fixtures;

namespace {

Vector scaled(const Rat& c, Vector v) {
  for (auto& q : v) q *= c;
  return v;
}

Vector plus(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// mu[e0,e0]=e0, mu[e0,e1]=2*e1, mu[e1,e0]=e1, mu[e1,e1]=e0. The asymmetric
// factor 2 breaks associativity: (e0 e0) e1 = 2*e1 but e0 (e0 e1) = 4*e1.
GradedAlgebra scaled_nonassociative() {
  std::map<std::vector<int>, Vector> structure;
  structure[{0, 0}] = {Rat(1), Rat(0)};
  structure[{0, 1}] = {Rat(0), Rat(2)};
  structure[{1, 0}] = {Rat(0), Rat(1)};
  structure[{1, 1}] = {Rat(1), Rat(0)};
  return GradedAlgebra({"a", "b"}, 2, 2, std::move(structure),
                       FiniteNaryGroup::affine(2, 2, 0), {0, 1});
}

// The ternary superalgebra's structure and degrees, but graded against the
// shifted law x+y+z+1 instead of x+y+z: four products land one component off.
GradedAlgebra mis_shifted_superalgebra() {
  const GradedAlgebra base = fx::ternary_superalgebra();
  return GradedAlgebra(base.basis(), base.mul_arity(), base.add_arity(),
                       base.structure(), fx::nonderived_ternary_group(),
                       base.degrees());
}

// One-dimensional components e_0,...,e_{N-1} over the shiftless sum law of
// the given carrier: mu[e_i,e_j,e_k] = e_{(i+j+k) mod N}.
GradedAlgebra sum_algebra_z(int carrier) {
  std::vector<std::string> basis;
  std::vector<int> degrees;
  for (int i = 0; i < carrier; ++i) {
    basis.push_back("b" + std::to_string(i));
    degrees.push_back(i);
  }
  std::map<std::vector<int>, Vector> structure;
  std::vector<int> args(3, 0);
  do {
    Vector out(static_cast<std::size_t>(carrier), Rat(0));
    out[static_cast<std::size_t>((args[0] + args[1] + args[2]) % carrier)] = 1;
    structure[args] = out;
  } while (next_tuple(args, carrier));
  return GradedAlgebra(std::move(basis), 3, 2, std::move(structure),
                       FiniteNaryGroup::affine(carrier, 3, 0), std::move(degrees));
}

}  // namespace

TEST_SUITE("graded_algebra") {

TEST_CASE("the Grassmann-style products follow the theta-counting rule") {
  for (int n : {3, 5, 7}) {
    const GradedAlgebra a = make_grassmann(n);
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    do {
      int thetas = 0;
      for (int v : word) thetas += v;
      const Vector product = a.basis_product(word);
      if (thetas == 0) {
        CHECK(product == a.basis_vector(0));
      } else if (thetas == 1) {
        CHECK(product == a.basis_vector(1));
      } else {
        CHECK(is_zero_vector(product));
      }
    } while (next_tuple(word, 2));
    CHECK(check_graded(a).ok());
  }
  CHECK_THROWS_AS(make_grassmann(2), std::invalid_argument);
  CHECK_THROWS_AS(make_grassmann(4), std::invalid_argument);
}

TEST_CASE("multiplication is linear in every slot") {
  auto rng = testsupport::make_rng(2);
  for (const GradedAlgebra& a : {fx::ternary_superalgebra(), fx::strong_ternary_instance()}) {
    for (int trial = 0; trial < 8; ++trial) {
      const Rat alpha = testsupport::draw_rat(rng);
      const Rat beta = testsupport::draw_rat(rng);
      const Vector u = testsupport::draw_vector(rng, 2);
      const Vector u2 = testsupport::draw_vector(rng, 2);
      const Vector v = testsupport::draw_vector(rng, 2);
      const Vector w = testsupport::draw_vector(rng, 2);
      for (std::size_t slot = 0; slot < 3; ++slot) {
        std::vector<Vector> mixed{v, v, w};
        std::vector<Vector> left{v, v, w};
        std::vector<Vector> right{v, v, w};
        mixed[slot] = plus(scaled(alpha, u), scaled(beta, u2));
        left[slot] = u;
        right[slot] = u2;
        CHECK(nary_multiply(a, mixed) ==
              plus(scaled(alpha, nary_multiply(a, left)),
                   scaled(beta, nary_multiply(a, right))));
      }
    }
  }
}

TEST_CASE("addition is the m-ary vector sum with a strict argument count") {
  const GradedAlgebra a = fx::ternary_superalgebra();
  const std::vector<Vector> args{{Rat(1), Rat(2)}, {Rat(3), Rat(-1)}};
  CHECK(mary_add(a, args) == Vector{Rat(4), Rat(1)});
  const std::vector<Vector> three(3, Vector{Rat(1), Rat(0)});
  CHECK_THROWS_AS(mary_add(a, three), std::invalid_argument);
}

TEST_CASE("word products consume quantized word lengths only") {
  const GradedAlgebra a = fx::ternary_superalgebra();
  const Vector u = a.basis_vector(0);
  CHECK(word_product(a, std::vector<Vector>{u}) == u);
  const std::vector<Vector> three(3, u);
  CHECK(word_product(a, three) == nary_multiply(a, three));
  const std::vector<Vector> four(4, u);
  CHECK_THROWS_AS(word_product(a, four), std::invalid_argument);

  // Power 2: left-nested by hand.
  auto rng = testsupport::make_rng(3);
  std::vector<Vector> word;
  for (int i = 0; i < 5; ++i) word.push_back(testsupport::draw_vector(rng, 2));
  const std::vector<Vector> inner(word.begin(), word.begin() + 3);
  const std::vector<Vector> outer{nary_multiply(a, inner), word[3], word[4]};
  CHECK(word_product(a, word) == nary_multiply(a, outer));
}

TEST_CASE("the Grassmann family is closed under two-fold words") {
  const GradedAlgebra g3 = make_grassmann(3);
  const GradedAlgebra g5 = make_grassmann(5);
  std::vector<int> word(5, 0);
  do {
    std::vector<Vector> vectors;
    for (int v : word) vectors.push_back(g3.basis_vector(v));
    CHECK(word_product(g3, vectors) == g5.basis_product(word));
  } while (next_tuple(word, 2));
}

TEST_CASE("components list basis indices by degree") {
  const GradedAlgebra a = fx::ternary_superalgebra();
  CHECK(a.component(0) == std::vector<int>{0});
  CHECK(a.component(1) == std::vector<int>{1});
  CHECK(a.degree(1) == 1);
  CHECK(support(a) == std::set<int>{0, 1});
}

TEST_CASE("the bundled algebras pass the inclusion check") {
  for (const GradedAlgebra& a :
       {fx::ternary_superalgebra(), fx::binary_superalgebra(),
        fx::strong_ternary_instance(), fx::fivary_superalgebra(), sum_algebra_z(3)}) {
    const auto report = check_graded(a);
    CHECK(report.ok());
    CHECK_FALSE(report.arity_mismatch);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("a shifted grading law pins four violations with exact degrees") {
  const GradedAlgebra a = mis_shifted_superalgebra();
  const auto report = check_graded(a);
  REQUIRE_FALSE(report.ok());
  const std::vector<GradingViolation> expected{
      {{0, 0, 0}, 0, 1, 0},
      {{0, 0, 1}, 1, 0, 1},
      {{0, 1, 0}, 1, 0, 1},
      {{1, 0, 0}, 1, 0, 1},
  };
  CHECK(report.violations == expected);
}

TEST_CASE("a grading group of the wrong arity is reported, not silently used") {
  const GradedAlgebra base = fx::ternary_superalgebra();
  const GradedAlgebra a(base.basis(), 3, 2, base.structure(), fx::binary_z2(),
                        base.degrees());
  const auto report = check_graded(a);
  CHECK(report.arity_mismatch);
  CHECK(report.group_arity == 2);
  CHECK(report.mul_arity == 3);
  CHECK_FALSE(report.ok());
}

TEST_CASE("strong grading holds for the one-dimensional sum instances") {
  CHECK(check_strongly_graded(fx::strong_ternary_instance()).ok());
  CHECK(check_strongly_graded(fx::fivary_superalgebra()).ok());
  CHECK(check_strongly_graded(sum_algebra_z(3)).ok());
}

TEST_CASE("the superalgebra misses strong grading exactly on theta-heavy words") {
  const auto report = check_strongly_graded(fx::ternary_superalgebra());
  CHECK(report.inclusion.ok());
  REQUIRE(report.deficiencies.size() == 4);
  const std::vector<std::vector<int>> expected_grades{
      {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(report.deficiencies[i].grades == expected_grades[i]);
    CHECK(report.deficiencies[i].achieved_rank == 0);
    CHECK(report.deficiencies[i].required_dim == 1);
    CHECK_FALSE(report.deficiencies[i].empty_factor);
  }
}

TEST_CASE("a missing component is reported as an empty factor") {
  std::map<std::vector<int>, Vector> structure;
  structure[{0, 0, 0}] = {Rat(1)};
  const GradedAlgebra a({"b0"}, 3, 2, std::move(structure),
                        FiniteNaryGroup::affine(2, 3, 0), {0});
  const auto report = check_strongly_graded(a);
  REQUIRE(report.deficiencies.size() == 3);
  const std::vector<std::vector<int>> expected_grades{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(report.deficiencies[i].grades == expected_grades[i]);
    CHECK(report.deficiencies[i].empty_factor);
  }
  const auto assertion = check_support_assertion(a);
  CHECK_FALSE(assertion.strongly_graded);
  CHECK(assertion.support_size == 1);
  CHECK(assertion.holds());
}

TEST_CASE("full support backs the order theorem for strongly graded instances") {
  const GradedAlgebra a = sum_algebra_z(3);
  const auto assertion = check_support_assertion(a);
  CHECK(assertion.strongly_graded);
  CHECK(assertion.support_size == 3);
  CHECK(assertion.holds());
  CHECK(check_order_theorem(a) == 2);
  CHECK(decomposition_length(a, 2) == 3);
}

TEST_CASE("group orders off the quantization grid fail the order theorem") {
  std::map<std::vector<int>, Vector> structure;
  structure[{0, 0, 0}] = {Rat(1)};
  const GradedAlgebra a({"b0"}, 3, 3, std::move(structure),
                        FiniteNaryGroup::affine(4, 3, 0), {0});
  CHECK_FALSE(check_order_theorem(a).has_value());
  CHECK(decomposition_length(a, 1) == 3);
}

TEST_CASE("relabeling the basis keeps the grading checks intact") {
  // Same instance as strong_ternary_instance with the two basis vectors
  // listed in the opposite order.
  std::map<std::vector<int>, Vector> structure;
  std::vector<int> args(3, 0);
  do {
    Vector out(2, Rat(0));
    const int degree_sum = (3 - args[0] - args[1] - args[2] + 1) % 2;
    out[static_cast<std::size_t>(1 - degree_sum)] = 1;
    structure[args] = out;
  } while (next_tuple(args, 2));
  const GradedAlgebra a({"a1", "a0"}, 3, 2, std::move(structure),
                        fx::nonderived_ternary_group(), {1, 0});
  CHECK(check_graded(a).ok());
  CHECK(check_strongly_graded(a).ok());
}

TEST_CASE("rescaling structure constants changes no grading verdict") {
  auto rng = testsupport::make_rng(4);
  const GradedAlgebra base = fx::strong_ternary_instance();
  std::map<std::vector<int>, Vector> structure;
  for (const auto& [args, out] : base.structure()) {
    structure[args] = scaled(testsupport::draw_rat(rng), out);
  }
  const GradedAlgebra a(base.basis(), 3, 2, std::move(structure), base.group(),
                        base.degrees());
  CHECK(check_graded(a).ok());
  CHECK(check_strongly_graded(a).ok());
}

TEST_CASE("associativity fails with a replayed witness on the scaled law") {
  const GradedAlgebra a = scaled_nonassociative();
  const auto result = is_algebra_totally_associative(a);
  REQUIRE_FALSE(result.ok);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->word == std::vector<int>{0, 0, 1});
  CHECK(result.witness->value_a == Vector{Rat(0), Rat(2)});
  CHECK(result.witness->value_b == Vector{Rat(0), Rat(4)});

  for (const GradedAlgebra& assoc : {fx::ternary_superalgebra(), fx::fivary_superalgebra()}) {
    CHECK(is_algebra_totally_associative(assoc).ok);
  }
}

TEST_CASE("one-application word grading coincides with the plain check") {
  for (const GradedAlgebra& a :
       {fx::ternary_superalgebra(), fx::strong_ternary_instance(),
        mis_shifted_superalgebra()}) {
    const auto direct = check_graded(a);
    const auto word = check_higher_power_graded(a, 1, a.group());
    CHECK(word.word_length == 3);
    CHECK(word.violations == direct.violations);
  }
}

TEST_CASE("two-fold words grade by the composed law, not the bundled 5-ary one") {
  const GradedAlgebra a = fx::strong_ternary_instance();
  const FiniteNaryGroup composed = compose_power(a.group(), 2);
  const auto self = check_higher_power_graded(a, 2, composed);
  CHECK(self.ok());
  CHECK(self.word_length == 5);
  CHECK(check_higher_power_strongly_graded(a, 2, composed).ok());

  const auto cross = check_higher_power_graded(a, 2, fx::fivary_grading_group());
  CHECK_FALSE(cross.ok());
  CHECK(cross.violations.size() == 32);

  const GradedAlgebra g3 = make_grassmann(3);
  const auto grassmann_words =
      check_higher_power_graded(g3, 2, compose_power(g3.group(), 2));
  CHECK(grassmann_words.ok());
}

TEST_CASE("word grading rejects a grading arity off the word length") {
  const GradedAlgebra a = fx::strong_ternary_instance();
  CHECK_THROWS_AS(check_higher_power_graded(a, 2, a.group()), std::invalid_argument);
  CHECK_THROWS_AS(check_higher_power_graded(a, 0, a.group()), std::invalid_argument);
}

TEST_CASE("nonassociative multiplications need the explicit left-nested mode") {
  const GradedAlgebra a = scaled_nonassociative();
  const FiniteNaryGroup sum3 = FiniteNaryGroup::affine(2, 3, 0);
  CHECK_THROWS_AS(
      check_higher_power_graded(a, 2, sum3, HigherPowerNesting::require_associative),
      ValidationError);
  const auto forced =
      check_higher_power_graded(a, 2, sum3, HigherPowerNesting::force_left);
  CHECK(forced.ok());
}

TEST_CASE("containment conditions accept matching grades and nothing else") {
  const GradedAlgebra a = fx::ternary_superalgebra();
  for (const auto& c : fx::ternary_superalgebra_conditions()) {
    CHECK(component_product_contained(a, c.grades, c.target));
  }
  // theta * theta * theta vanishes, so it is contained in either component.
  CHECK(component_product_contained(a, std::vector<int>{1, 1, 1}, 0));
  CHECK(component_product_contained(a, std::vector<int>{1, 1, 1}, 1));
  // u * u * u is exactly u, so the odd component cannot hold it.
  CHECK_FALSE(component_product_contained(a, std::vector<int>{0, 0, 0}, 1));
  CHECK_THROWS_AS(component_product_contained(a, std::vector<int>{0, 0}, 0),
                  std::invalid_argument);

  const GradedAlgebra strong = fx::strong_ternary_instance();
  for (const auto& c : fx::nonderived_ternary_conditions()) {
    CHECK(component_product_contained(strong, c.grades, c.target));
    CHECK_FALSE(component_product_contained(strong, c.grades, 1 - c.target));
  }
  const GradedAlgebra five = fx::fivary_superalgebra();
  for (const auto& c : fx::fivary_superalgebra_conditions()) {
    CHECK(component_product_contained(five, c.grades, c.target));
  }
}

TEST_CASE("construction validates labels, degrees, and structure shape") {
  const FiniteNaryGroup z2 = FiniteNaryGroup::affine(2, 3, 0);
  std::map<std::vector<int>, Vector> ok_structure;
  ok_structure[{0, 0, 0}] = {Rat(1), Rat(0)};

  CHECK_THROWS_AS(GradedAlgebra({}, 3, 2, {}, z2, {}), ValidationError);
  CHECK_THROWS_AS(GradedAlgebra({"u", "u"}, 3, 2, ok_structure, z2, {0, 0}),
                  ValidationError);
  CHECK_THROWS_AS(GradedAlgebra({"u", "t"}, 3, 2, ok_structure, z2, {0}),
                  ValidationError);
  CHECK_THROWS_AS(GradedAlgebra({"u", "t"}, 3, 2, ok_structure, z2, {0, 2}),
                  ValidationError);
  CHECK_THROWS_AS(GradedAlgebra({"u", "t"}, 1, 2, ok_structure, z2, {0, 1}),
                  ValidationError);

  std::map<std::vector<int>, Vector> bad_tuple;
  bad_tuple[{0, 0}] = {Rat(1), Rat(0)};
  CHECK_THROWS_AS(GradedAlgebra({"u", "t"}, 3, 2, bad_tuple, z2, {0, 1}),
                  ValidationError);
  std::map<std::vector<int>, Vector> bad_index;
  bad_index[{0, 0, 2}] = {Rat(1), Rat(0)};
  CHECK_THROWS_AS(GradedAlgebra({"u", "t"}, 3, 2, bad_index, z2, {0, 1}),
                  ValidationError);
  std::map<std::vector<int>, Vector> bad_value;
  bad_value[{0, 0, 0}] = {Rat(1)};
  CHECK_THROWS_AS(GradedAlgebra({"u", "t"}, 3, 2, bad_value, z2, {0, 1}),
                  ValidationError);

  std::map<std::vector<int>, Vector> with_zero = ok_structure;
  with_zero[{0, 0, 1}] = {Rat(0), Rat(0)};
  const GradedAlgebra trimmed({"u", "t"}, 3, 2, with_zero, z2, {0, 1});
  CHECK(trimmed.structure().size() == 1);
}

TEST_CASE("exhaustive grading checks respect the budget") {
  const EvalBudget tiny{2};
  CHECK_THROWS_AS(check_graded(fx::fivary_superalgebra(), tiny), BudgetExceeded);
  CHECK_THROWS_AS(check_strongly_graded(fx::strong_ternary_instance(), tiny),
                  BudgetExceeded);
}

}  // TEST_SUITE
