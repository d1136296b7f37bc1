#pragma once

#include "polygrade/errors.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace polygrade {

// Law of a finite n'-ary operation on the carrier {0,...,N-1}.
//
// Affine: mu[x_1,...,x_n'] = (x_1 + ... + x_n' + shift) mod N.
// Table:  explicit values, row-major over the argument tuple
//         (leftmost argument slowest).
struct AffineLaw {
  long shift = 0;
};
struct TableLaw {
  std::vector<int> entries;
};
using GroupLaw = std::variant<AffineLaw, TableLaw>;

// A word of length 2(n'-1)+1 evaluated with the inner application at two
// different offsets gives two different results.
struct AssociativityWitness {
  std::vector<int> word;
  int placement_a = 0;
  int placement_b = 0;
  int value_a = 0;
  int value_b = 0;
};

// An argument tuple whose value changes under sorting, i.e. under some
// permutation of the arguments.
struct CommutativityWitness {
  std::vector<int> args;
  std::vector<int> sorted_args;
  int value = 0;
  int sorted_value = 0;
};

// An element whose equation mu[a,...,a,x] = a has no solution or several.
struct QuerelementWitness {
  int element = 0;
  std::vector<int> solutions;
};

struct GroupValidationReport {
  std::optional<AssociativityWitness> associativity;
  std::optional<CommutativityWitness> commutativity;
  std::optional<QuerelementWitness> querelement;

  bool ok() const { return !associativity && !commutativity && !querelement; }
  std::string describe() const;
};

class GroupValidationError : public ValidationError {
 public:
  explicit GroupValidationError(GroupValidationReport report);
  const GroupValidationReport& report() const { return report_; }

 private:
  GroupValidationReport report_;
};

// A finite commutative n'-ary group on {0,...,N-1}. The checked factories
// verify total associativity, commutativity, and unique querelements by
// exhaustive search (gated by the budget) and throw GroupValidationError
// with a witness on failure. `unchecked` skips validation so the axiom
// checks below can be exercised on raw operations.
class FiniteNaryGroup {
 public:
  static FiniteNaryGroup affine(int carrier_size, int arity, long shift,
                                const EvalBudget& budget = {});
  static FiniteNaryGroup from_table(int carrier_size, int arity,
                                    std::vector<int> entries,
                                    const EvalBudget& budget = {});
  static FiniteNaryGroup unchecked(int carrier_size, int arity, GroupLaw law);

  int carrier_size() const { return carrier_size_; }
  int arity() const { return arity_; }
  const GroupLaw& law() const { return law_; }

  bool is_affine() const;
  long affine_shift() const;  // throws std::logic_error for table laws

  int apply(std::span<const int> args) const;

  // Dense row-major value table of `apply` over all argument tuples.
  std::vector<int> cayley_table(const EvalBudget& budget = {}) const;

 private:
  FiniteNaryGroup(int carrier_size, int arity, GroupLaw law);

  int carrier_size_ = 2;
  int arity_ = 2;
  GroupLaw law_;
};

// Same carrier and arity, and the same value on every argument tuple.
bool same_operation(const FiniteNaryGroup& a, const FiniteNaryGroup& b,
                    const EvalBudget& budget = {});

// All e with mu[e,...,e,a] = a for every a. By commutativity the slot of a
// does not matter. May be empty or hold several elements.
std::set<int> find_identities(const FiniteNaryGroup& g, const EvalBudget& budget = {});

// All z with mu[a_1,...,a_{n'-1},z] = z for all choices of the other
// arguments.
std::set<int> find_zeros(const FiniteNaryGroup& g, const EvalBudget& budget = {});

// The unique x with mu[a,...,a,x] = a. Requires a law that validates;
// throws ValidationError when the solution is missing or ambiguous.
int querelement(const FiniteNaryGroup& g, int a);

struct AssociativityResult {
  bool ok = false;
  std::optional<AssociativityWitness> witness;
};
AssociativityResult is_totally_associative(const FiniteNaryGroup& g,
                                           const EvalBudget& budget = {});

struct CommutativityResult {
  bool ok = false;
  std::optional<CommutativityWitness> witness;
};
CommutativityResult is_commutative(const FiniteNaryGroup& g,
                                   const EvalBudget& budget = {});

GroupValidationReport validate_group(const FiniteNaryGroup& g,
                                     const EvalBudget& budget = {});

// gcd(N, n'-1) together with the identity search. gcd > 1 with no identity
// certifies that the law cannot be a repeated binary product; the converse
// does not hold, so this is a one-way certificate.
struct DerivednessCertificate {
  bool has_identity = false;
  long gcd_value = 1;
  bool necessarily_nonderived = false;
};
DerivednessCertificate derivedness_certificate(const FiniteNaryGroup& g,
                                               const EvalBudget& budget = {});

// The ell-fold left-nested composition of g with itself, of arity
// ell*(n'-1)+1 (affine laws stay affine with the shift accumulated ell
// times; table laws are materialized). The composition of a valid group is
// again a valid group; the axioms are re-checked as a self-test when that
// fits the budget.
FiniteNaryGroup compose_power(const FiniteNaryGroup& g, long ell,
                              const EvalBudget& budget = {});

}  // namespace polygrade
