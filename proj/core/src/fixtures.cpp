#include "polygrade/fixtures.hpp"

#include "polygrade/tuples.hpp"

namespace polygrade::fixtures {
namespace {

// {a0, a1} with the full (sum + shift) mod 2 product of the given arity:
// one-dimensional components, every basis product another basis vector.
GradedAlgebra sum_shift_superalgebra(FiniteNaryGroup group) {
  const int n = group.arity();
  std::map<std::vector<int>, Vector> structure;
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  do {
    Vector out = {Rat(0), Rat(0)};
    out[static_cast<std::size_t>(group.apply(tuple))] = 1;
    structure[tuple] = out;
  } while (next_tuple(tuple, 2));
  return GradedAlgebra({"a0", "a1"}, n, 2, std::move(structure), std::move(group), {0, 1});
}

}  // namespace

FiniteNaryGroup nonderived_ternary_group() { return FiniteNaryGroup::affine(2, 3, 1); }

const std::vector<int>& nonderived_ternary_table() {
  static const std::vector<int> table = {1, 0, 0, 1, 0, 1, 1, 0};
  return table;
}

FiniteNaryGroup binary_z2() { return FiniteNaryGroup::affine(2, 2, 0); }

FiniteNaryGroup fivary_grading_group() { return FiniteNaryGroup::affine(2, 5, 1); }

const std::vector<int>& fivary_grading_table() {
  static const std::vector<int> table = {
      1, 0, 0, 1, 0, 1, 1, 0,  // x=0, y=0
      0, 1, 1, 0, 1, 0, 0, 1,  // x=0, y=1
      0, 1, 1, 0, 1, 0, 0, 1,  // x=1, y=0
      1, 0, 0, 1, 0, 1, 1, 0,  // x=1, y=1
  };
  return table;
}

GradedAlgebra ternary_superalgebra() { return make_grassmann(3); }

GradedAlgebra binary_superalgebra() {
  std::map<std::vector<int>, Vector> structure;
  structure[{0, 0}] = {Rat(1), Rat(0)};
  structure[{0, 1}] = {Rat(0), Rat(1)};
  structure[{1, 0}] = {Rat(0), Rat(1)};
  return GradedAlgebra({"u", "theta"}, 2, 2, std::move(structure), binary_z2(), {0, 1});
}

GradedAlgebra strong_ternary_instance() {
  return sum_shift_superalgebra(nonderived_ternary_group());
}

GradedAlgebra fivary_superalgebra() {
  return sum_shift_superalgebra(fivary_grading_group());
}

MatrixPolynomial bundled_4ary_polynomial() {
  return MatrixPolynomial::make(4, Rat(3),
                                {{7, Rat(-12)}, {10, Rat(7)}, {16, Rat(5)}, {19, Rat(-8)}});
}

PolyadicIntegerRing bundled_4_7_ring() { return PolyadicIntegerRing::make(1, 3, 4, 7); }

GradedHomomorphism even_scaling_hom(const Rat& c) {
  GradedHomomorphism hom;
  hom.phi_rows = {{Rat(1), Rat(0)}, {Rat(0), c}};
  hom.psi = {0, 1};
  return hom;
}

GradedHomomorphism grade_mixing_hom() {
  GradedHomomorphism hom;
  hom.phi_rows = {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
  hom.psi = {0, 1};
  return hom;
}

std::vector<GradingCondition> ternary_superalgebra_conditions() {
  return {
      {{0, 0, 0}, 0},
      {{0, 0, 1}, 1},
      {{0, 1, 1}, 0},
      {{1, 1, 1}, 0},
  };
}

std::vector<GradingCondition> binary_superalgebra_conditions() {
  return {
      {{0, 0}, 0},
      {{0, 1}, 1},
      {{1, 0}, 1},
      {{1, 1}, 0},
  };
}

std::vector<GradingCondition> nonderived_ternary_conditions() {
  return {
      {{0, 0, 0}, 1},
      {{0, 0, 1}, 0},
      {{0, 1, 0}, 0},
      {{0, 1, 1}, 1},
      {{1, 0, 0}, 0},
      {{1, 0, 1}, 1},
      {{1, 1, 0}, 1},
      {{1, 1, 1}, 0},
  };
}

std::vector<GradingCondition> fivary_superalgebra_conditions() {
  return {
      {{0, 0, 0, 0, 0}, 1},
      {{0, 0, 1, 0, 1}, 1},
      {{0, 1, 0, 0, 0}, 0},
      {{0, 1, 1, 0, 1}, 0},
      {{1, 0, 0, 0, 0}, 0},
      {{1, 0, 1, 0, 1}, 0},
      {{1, 1, 0, 0, 0}, 1},
      {{1, 1, 1, 0, 1}, 1},
      {{0, 0, 0, 1, 0}, 0},
      {{0, 0, 1, 1, 1}, 0},
      {{0, 1, 0, 1, 0}, 1},
      {{0, 1, 1, 1, 1}, 1},
      {{1, 0, 0, 1, 0}, 1},
      {{1, 0, 1, 1, 1}, 1},
      {{1, 1, 0, 1, 0}, 0},
      {{1, 1, 1, 1, 1}, 0},
  };
}

const std::vector<HigherPowerSolution>& higher_power_solution_table() {
  static const std::vector<HigherPowerSolution> table = {
      {3, 2, 3, 4, 7},
      {2, 1, 3, 5, 5},
      {4, 2, 3, 5, 9},
      {2, 3, 4, 3, 7},
      {4, 3, 4, 5, 13},
      {1, 2, 5, 3, 5},
      {2, 4, 5, 3, 9},
      {3, 4, 5, 4, 13},
  };
  return table;
}

}  // namespace polygrade::fixtures
