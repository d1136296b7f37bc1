#pragma once

#include "polygrade/blockshift.hpp"
#include "polygrade/errors.hpp"
#include "polygrade/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polygrade {

// Closure invariants of the congruence class a mod b under m''-ary
// addition and n''-ary multiplication:
//   I = (a/b) * (m'' - 1)          (sums stay in the class)
//   J = (a/b) * (a^(n''-1) - 1)    (products stay in the class)
// The class is closed under both operations exactly when I and J are
// nonnegative integers.
struct ShapeInvariants {
  Rat I;
  Rat J;

  bool admissible() const {
    return rat_is_integral(I) && rat_is_integral(J) && I >= 0 && J >= 0;
  }
};
ShapeInvariants shape_invariants(const Int& a, const Int& b, int m_add, int n_mul);

// The set {a + k*b : k in Z} with m''-ary addition and n''-ary
// multiplication inherited from Z. `make` validates the shape invariants
// and runs a closure spot-test; invalid shapes are rejected with the
// offending invariant value.
class PolyadicIntegerRing {
 public:
  static PolyadicIntegerRing make(const Int& a, const Int& b, int m_add, int n_mul);

  const Int& residue() const { return a_; }
  const Int& modulus() const { return b_; }
  int add_arity() const { return m_add_; }
  int mul_arity() const { return n_mul_; }
  const ShapeInvariants& invariants() const { return invariants_; }

  bool contains(const Int& y) const;
  Int representative(const Int& k) const;  // a + k*b

  // m''-ary sum / n''-ary product of class members; arguments are checked
  // for membership and the result is asserted back into the class.
  Int add(std::span<const Int> args) const;
  Int mul(std::span<const Int> args) const;

  // The q in the class with (m''-1)-fold y followed by q summing to y:
  // q = y*(2 - m''). Stays in the class because I is integral.
  Int additive_querelement(const Int& y) const;

 private:
  PolyadicIntegerRing(Int a, Int b, int m_add, int n_mul, ShapeInvariants invariants);

  Int a_;
  Int b_;
  int m_add_;
  int n_mul_;
  ShapeInvariants invariants_;
};

// Smallest arities (>= 2, up to cap) under which the class a mod b is
// closed; nullopt past the cap.
struct MinimalArities {
  std::optional<int> m_add;
  std::optional<int> n_mul;
  int cap = 0;
};
MinimalArities minimal_arities(const Int& a, const Int& b, int cap = 64);

// The class 1 mod (n-1) with n-ary addition: the degrees ell*(n-1)+1 of
// admissible block-shift monomials of arity n are exactly its nonnegative
// members, so it grades those polynomials. I == 1 and J == 0 for every
// multiplication arity.
PolyadicIntegerRing grading_ring_for_polynomials(int algebra_arity, int n_mul);

// One checked tuple of an exponent-grading run: n term exponents, the
// degree of their product component on the left, the ring sum of the
// exponents on the right.
struct PolynomialGradingEntry {
  std::vector<long> exponents;
  long lhs_exponent = 0;
  Int rhs_sum;
  long power = 0;
  bool ok = false;
};

struct PolynomialGradingReport {
  std::vector<PolynomialGradingEntry> entries;
  std::string power_rule_note;

  bool ok() const;
};

// Checks, for every n-tuple of term exponents of the polynomial, that the
// degree arithmetic of the product component matches the ring's n-ary sum
// of the exponents. Requires ring.add_arity() == poly.arity and an
// admissible polynomial (std::invalid_argument otherwise).
PolynomialGradingReport check_polynomial_grading(const MatrixPolynomial& poly,
                                                 const PolyadicIntegerRing& ring,
                                                 const EvalBudget& budget = {});

}  // namespace polygrade
