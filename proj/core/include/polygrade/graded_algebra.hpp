#pragma once

#include "polygrade/nary_group.hpp"
#include "polygrade/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace polygrade {

// Coordinate vector over the algebra basis; exact rationals throughout.
using Vector = std::vector<Rat>;

bool is_zero_vector(const Vector& v);

// A finite-dimensional algebra over Q with an n-ary multiplication given
// by a structure tensor on a fixed basis, an m-ary addition (iterated
// vector addition), and a degree map from basis vectors into a finite
// grading group.
//
// The structure tensor assigns to each n-tuple of basis indices the
// coordinates of the product of those basis vectors; only tuples with a
// nonzero product are stored, and the product of arbitrary vectors is the
// n-linear extension.
class GradedAlgebra {
 public:
  GradedAlgebra(std::vector<std::string> basis, int mul_arity, int add_arity,
                std::map<std::vector<int>, Vector> structure, FiniteNaryGroup group,
                std::vector<int> degrees);

  int dim() const { return static_cast<int>(basis_.size()); }
  int mul_arity() const { return mul_arity_; }
  int add_arity() const { return add_arity_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::map<std::vector<int>, Vector>& structure() const { return structure_; }
  const FiniteNaryGroup& group() const { return group_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(int basis_index) const { return degrees_.at(basis_index); }

  // Basis indices of the homogeneous component of degree g, in order.
  std::vector<int> component(int g) const;

  Vector basis_vector(int i) const;
  Vector zero() const { return Vector(basis_.size(), Rat(0)); }

  // Product of n basis vectors, straight from the tensor.
  Vector basis_product(std::span<const int> indices) const;

 private:
  std::vector<std::string> basis_;
  int mul_arity_;
  int add_arity_;
  std::map<std::vector<int>, Vector> structure_;
  FiniteNaryGroup group_;
  std::vector<int> degrees_;
};

// n-linear extension of the structure tensor to arbitrary vectors.
Vector nary_multiply(const GradedAlgebra& a, std::span<const Vector> args);

// m-ary sum (requires exactly add_arity arguments).
Vector mary_add(const GradedAlgebra& a, std::span<const Vector> args);

// Left-nested product of a quantized word of ell applications,
// consuming ell*(n-1)+1 vectors.
Vector word_product(const GradedAlgebra& a, std::span<const Vector> word);

// Total associativity of the multiplication, checked on basis words
// (sufficient for all vectors by multilinearity).
struct AlgebraAssociativityWitness {
  std::vector<int> word;
  int placement_a = 0;
  int placement_b = 0;
  Vector value_a;
  Vector value_b;
};
struct AlgebraAssociativityResult {
  bool ok = false;
  std::optional<AlgebraAssociativityWitness> witness;
};
AlgebraAssociativityResult is_algebra_totally_associative(const GradedAlgebra& a,
                                                          const EvalBudget& budget = {});

// One product of homogeneous basis vectors that leaves its expected
// component: the coordinate out_index is nonzero but its degree differs
// from the group law applied to the argument degrees.
struct GradingViolation {
  std::vector<int> args;
  int out_index = 0;
  int expected_degree = 0;
  int actual_degree = 0;

  friend auto operator<=>(const GradingViolation&, const GradingViolation&) = default;
};

struct GradedCheckReport {
  bool arity_mismatch = false;
  int group_arity = 0;
  int mul_arity = 0;
  std::vector<GradingViolation> violations;

  bool ok() const { return !arity_mismatch && violations.empty(); }
};

// Inclusion check: every product of homogeneous basis vectors lands in the
// component named by the grading group applied to the argument degrees.
GradedCheckReport check_graded(const GradedAlgebra& a, const EvalBudget& budget = {});

// A grade tuple whose products fail to span the whole target component.
struct SpanDeficiency {
  std::vector<int> grades;
  int target_grade = 0;
  std::size_t achieved_rank = 0;
  std::size_t required_dim = 0;
  bool empty_factor = false;
};

struct StrongGradedReport {
  GradedCheckReport inclusion;
  std::vector<SpanDeficiency> deficiencies;

  bool ok() const { return inclusion.ok() && deficiencies.empty(); }
};

// Strong grading: inclusion, plus for every grade tuple the products of
// the chosen components span the full target component (exact rank over Q).
// A nonzero target with an empty factor component is reported as a
// deficiency with empty_factor set.
StrongGradedReport check_strongly_graded(const GradedAlgebra& a,
                                         const EvalBudget& budget = {});

// Grades with a nonzero homogeneous component.
std::set<int> support(const GradedAlgebra& a);

// For a strongly graded algebra the support must exhaust the grading
// group; holds() is vacuously true when the algebra is not strongly graded.
struct SupportAssertionReport {
  bool strongly_graded = false;
  std::size_t support_size = 0;
  int group_order = 0;

  bool holds() const {
    return !strongly_graded || support_size == static_cast<std::size_t>(group_order);
  }
};
SupportAssertionReport check_support_assertion(const GradedAlgebra& a,
                                               const EvalBudget& budget = {});

// Number of components in an ell_m-fold m-ary direct-sum decomposition:
// ell_m*(m-1)+1.
long decomposition_length(const GradedAlgebra& a, long ell_m);

// For a strongly graded algebra with full support, the group order equals
// a quantized decomposition length: |G| = ell_m*(m-1)+1 for an integer
// ell_m >= 0, returned when it exists. nullopt means the order is not
// quantized for the algebra's addition arity -- a genuine failure for a
// strongly graded algebra.
std::optional<long> check_order_theorem(const GradedAlgebra& a);

enum class HigherPowerNesting {
  require_associative,  // refuse non-associative multiplications for ell_n >= 2
  force_left,           // evaluate left-nested without the associativity gate
};

struct HigherPowerReport {
  long ell_n = 0;
  long word_length = 0;
  std::vector<GradingViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Grading by words: every ell_n-fold product of homogeneous basis vectors
// lands in the component named by one application of grading_op to the
// word of degrees. Requires grading_op's arity to equal the word length
// ell_n*(n-1)+1 (std::invalid_argument otherwise -- the two power/arity
// pairs must solve the coupled word-length equation).
HigherPowerReport check_higher_power_graded(
    const GradedAlgebra& a, long ell_n, const FiniteNaryGroup& grading_op,
    HigherPowerNesting nesting = HigherPowerNesting::require_associative,
    const EvalBudget& budget = {});

struct HigherPowerStrongReport {
  HigherPowerReport inclusion;
  std::vector<SpanDeficiency> deficiencies;

  bool ok() const { return inclusion.ok() && deficiencies.empty(); }
};
HigherPowerStrongReport check_higher_power_strongly_graded(
    const GradedAlgebra& a, long ell_n, const FiniteNaryGroup& grading_op,
    HigherPowerNesting nesting = HigherPowerNesting::require_associative,
    const EvalBudget& budget = {});

// True iff every ell-fold word product of basis vectors drawn from the
// listed components lies in the span of component `target`.
bool component_product_contained(const GradedAlgebra& a, std::span<const int> grades,
                                 int target, long ell = 1,
                                 const EvalBudget& budget = {});

// The Grassmann-style n-ary superalgebra on basis {u, theta}: u is the
// n-ary unit, theta squares away (any product with two or more thetas
// vanishes), graded over Z_2 with deg u = 0, deg theta = 1 and the sum-mod-2
// grading law of matching arity. Odd n >= 3 only: a word with a single
// theta needs an even number of u's around it.
GradedAlgebra make_grassmann(int n_arity);

}  // namespace polygrade
