#pragma once

#include "polygrade/graded_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polygrade {

// A candidate graded homomorphism between algebras A and B: a linear map
// phi given by the images of A's basis vectors, and a carrier map psi
// between the grading groups. The checks below test the defining
// properties one by one; none of them is assumed.
struct GradedHomomorphism {
  std::vector<Vector> phi_rows;  // phi_rows[i] = phi(e_i), length dim(B)
  std::vector<int> psi;          // psi[g] for every source grade g

  Vector apply_phi(const Vector& v) const;
  int apply_psi(int g) const;
};

// Shape compatibility: matching multiplication and addition arities,
// phi covering A's basis with vectors of B's dimension, psi covering the
// source carrier with values in the target carrier. Violations throw
// std::invalid_argument.
void require_compatible(const GradedHomomorphism& hom, const GradedAlgebra& a,
                        const GradedAlgebra& b);

// phi applied to an m-ary sum versus the m-ary sum of images, evaluated on
// a deterministic family of sample tuples. A matrix-given map is additive
// by construction, so this is a self-test; the sample count is recorded.
struct AdditiveSample {
  std::vector<Vector> args;
  Vector lhs;
  Vector rhs;
  bool ok = false;
};
struct AdditiveReport {
  std::vector<AdditiveSample> samples;
  bool ok() const;
};
AdditiveReport check_additive(const GradedHomomorphism& hom, const GradedAlgebra& a,
                              const GradedAlgebra& b);

// phi(mu_A[e_i1..e_in]) == mu_B[phi(e_i1)..phi(e_in)] on every basis
// tuple; multilinearity extends the identity to all vectors.
struct MultiplicativeViolation {
  std::vector<int> args;
  Vector lhs;
  Vector rhs;
};
struct MultiplicativeReport {
  std::vector<MultiplicativeViolation> violations;
  bool ok() const { return violations.empty(); }
};
MultiplicativeReport check_multiplicative(const GradedHomomorphism& hom,
                                          const GradedAlgebra& a, const GradedAlgebra& b,
                                          const EvalBudget& budget = {});

// psi applied to the source group law versus the target law applied to
// psi of the arguments, on every argument tuple.
struct GroupHomViolation {
  std::vector<int> args;
  int lhs = 0;
  int rhs = 0;
};
struct GroupHomReport {
  bool arity_mismatch = false;
  std::vector<GroupHomViolation> violations;
  bool ok() const { return !arity_mismatch && violations.empty(); }
};
GroupHomReport check_group_hom(const GradedHomomorphism& hom, const FiniteNaryGroup& g,
                               const FiniteNaryGroup& h, const EvalBudget& budget = {});

// phi maps each homogeneous component A(g) into B(psi(g)): the image of
// every basis vector of degree g must lie in the span of B's component
// psi(g), decided by exact rank.
struct GradingPreservationViolation {
  int basis_index = 0;
  int source_degree = 0;
  int target_degree = 0;
  Vector image;
};
struct GradingPreservationReport {
  std::vector<GradingPreservationViolation> violations;
  bool ok() const { return violations.empty(); }
};
GradingPreservationReport check_preserves_grading(const GradedHomomorphism& hom,
                                                  const GradedAlgebra& a,
                                                  const GradedAlgebra& b);

// All four properties bundled; ok() iff every part passes.
struct GradedHomReport {
  AdditiveReport additive;
  MultiplicativeReport multiplicative;
  GroupHomReport group_hom;
  GradingPreservationReport grading;

  bool ok() const {
    return additive.ok() && multiplicative.ok() && group_hom.ok() && grading.ok();
  }
  std::string summary() const;
};
GradedHomReport check_graded_homomorphism(const GradedHomomorphism& hom,
                                          const GradedAlgebra& a, const GradedAlgebra& b,
                                          const EvalBudget& budget = {});

// hom2 after hom1 (A --hom1--> B --hom2--> C).
GradedHomomorphism compose(const GradedHomomorphism& hom2, const GradedHomomorphism& hom1);

}  // namespace polygrade
