#pragma once

#include "polygrade/arity.hpp"
#include "polygrade/blockshift.hpp"
#include "polygrade/graded_algebra.hpp"
#include "polygrade/homs.hpp"
#include "polygrade/nary_group.hpp"
#include "polygrade/zpoly.hpp"

#include <vector>

namespace polygrade::fixtures {

// The strictly nonderived ternary group on two elements:
// mu[x,y,z] = x+y+z+1 mod 2. gcd(2,2) = 2 and there is no identity, so no
// binary law can generate it.
FiniteNaryGroup nonderived_ternary_group();

// Golden value table of that law, row-major over (x,y,z).
const std::vector<int>& nonderived_ternary_table();

// Binary addition mod 2.
FiniteNaryGroup binary_z2();

// The 5-ary law x+y+z+t+u+1 mod 2, bundled as the grading operation of the
// 5-ary superalgebra below.
FiniteNaryGroup fivary_grading_group();

// Golden value table of that law, row-major over (x,y,z,t,u), transcribed
// from its parity-class presentation: the even arguments (z,t,u) select one
// 2x2 block over (x,y), the odd ones its complement.
const std::vector<int>& fivary_grading_table();

// Ternary Grassmann-style superalgebra on {u, theta}; see make_grassmann.
GradedAlgebra ternary_superalgebra();

// Its binary counterpart: u the unit, theta*theta = 0, graded by Z_2.
GradedAlgebra binary_superalgebra();

// One-dimensional components over the nonderived ternary group: basis
// {a0, a1} with mu[e_i,e_j,e_k] = e_{i+j+k+1 mod 2}. Strongly graded.
GradedAlgebra strong_ternary_instance();

// 5-ary product on {a0, a1}: mu[e_i1..e_i5] = e_{i1+..+i5+1 mod 2}, graded
// by the 5-ary grading group. Not the two-fold word algebra of the ternary
// instance: composing the ternary law with itself accumulates the shift
// twice (x+..+u+2 = x+..+u mod 2), while this law shifts once.
GradedAlgebra fivary_superalgebra();

// 3E - 12X^7 + 7X^10 + 5X^16 - 8X^19 at arity 4; every exponent has the
// admissible form 3*ell + 1.
MatrixPolynomial bundled_4ary_polynomial();

// The class 1 mod 3 with 4-ary addition and 7-ary multiplication.
PolyadicIntegerRing bundled_4_7_ring();

// phi(u) = u, phi(theta) = c*theta, psi = identity on Z_2. A graded
// homomorphism of the superalgebras for every nonzero c.
GradedHomomorphism even_scaling_hom(const Rat& c);

// phi(u) = u + theta, phi(theta) = theta, psi = identity: mixes the even
// image into the odd component, so grading preservation fails at u.
GradedHomomorphism grade_mixing_hom();

// A component-product containment condition: grades of the factors and the
// component the product must land in.
struct GradingCondition {
  std::vector<int> grades;
  int target = 0;
};

// The four ternary superalgebra conditions (words of length 3 over Z_2,
// one representative per multiset).
std::vector<GradingCondition> ternary_superalgebra_conditions();

// The four binary superalgebra conditions.
std::vector<GradingCondition> binary_superalgebra_conditions();

// All eight ternary conditions of the strong instance.
std::vector<GradingCondition> nonderived_ternary_conditions();

// Sixteen 5-ary conditions: all (x,y,z,t) over Z_2 with the fifth grade
// tied to the third, as bundled with the 5-ary superalgebra.
std::vector<GradingCondition> fivary_superalgebra_conditions();

// Golden table of coupled-power solutions for max value 5, sorted by
// (n_gp, n_alg, ell_gp).
const std::vector<HigherPowerSolution>& higher_power_solution_table();

}  // namespace polygrade::fixtures
