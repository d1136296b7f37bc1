#pragma once

#include "polygrade/rational.hpp"
#include "polygrade/ratlinalg.hpp"

#include <map>
#include <span>
#include <vector>

namespace polygrade {

// coeff * X(x^exponent), where X(y) is the (n-1)x(n-1) cyclic block-shift
// matrix carrying y in every shifted slot: row i holds y at column
// (i+1) mod (n-1). For n == 2 it degenerates to the 1x1 matrix [y].
//
// The n-fold product law is X(y_1)...X(y_n) = X(y_1...y_n), so exponents
// add under the n-ary product. Exponent 0 is the polyadic identity E = X(1).
struct BlockShiftMonomial {
  int arity = 2;
  Rat coeff = 0;
  long exponent = 0;

  // Monomials reachable from X(x) by n-ary products have exponent
  // ell*(n-1)+1; E has exponent 0. Querelements can leave this set, so it
  // is tracked rather than enforced.
  bool admissible() const;

  friend bool operator==(const BlockShiftMonomial&, const BlockShiftMonomial&) = default;
};

// Exponent of an ell-fold product component: ell*(n-1)+1.
long monomial_degree(long ell, int arity);

// Product of exactly n monomials of matching arity: coefficients multiply,
// exponents add.
BlockShiftMonomial nary_monomial_product(std::span<const BlockShiftMonomial> args);

// The matrix coeff * X(x_value^exponent); the oracle the symbolic layer is
// tested against. Negative exponents require x_value != 0.
RatMatrix matrix_realization(const BlockShiftMonomial& mono, const Rat& x_value);

// The monomial q with X(y)^{n-1} q = X(y) (n-1 copies of the monomial, one
// querelement, one n-ary product): exponent d*(2-n), coefficient c^(2-n).
// Requires coeff != 0.
BlockShiftMonomial querelement_monomial(const BlockShiftMonomial& mono);

// Probes the two identity laws at the given sample points x:
// (n-1) copies of E and one X(x) reproduce X(x); and E equals the ordinary
// identity matrix exactly when n == 2.
struct PolyadicIdentityReport {
  bool identity_law_holds = false;
  bool e_equals_ordinary_identity = false;

  bool ok(int arity) const {
    return identity_law_holds && (e_equals_ordinary_identity == (arity == 2));
  }
};
PolyadicIdentityReport polyadic_identity_check(int arity, std::span<const Rat> x_values);

// Default probe points for the matrix oracle: 1, 2, 3/2.
const std::vector<Rat>& default_probe_values();

// constant * E plus terms coeff * X(x^exponent), exponents >= 1, stored
// with no zero coefficients.
struct MatrixPolynomial {
  int arity = 2;
  Rat constant = 0;
  std::map<long, Rat> terms;

  // Canonicalizes (drops zero coefficients) and validates: arity >= 2,
  // exponents >= 1.
  static MatrixPolynomial make(int arity, Rat constant, std::map<long, Rat> terms);

  bool is_zero() const { return constant == 0 && terms.empty(); }

  friend bool operator==(const MatrixPolynomial&, const MatrixPolynomial&) = default;
};

// constant * E + sum of term matrices at the sample point x_value, E being
// the exponent-0 block shift X(1) (not the ordinary identity for n >= 3).
RatMatrix polynomial_realization(const MatrixPolynomial& p, const Rat& x_value);

struct PolynomialProductResult {
  MatrixPolynomial product;
  // Exponents of product terms that are neither 0 nor ell*(n-1)+1; sorted.
  std::vector<long> non_admissible_exponents;
};

// Product of exactly n polynomials of matching arity, expanded
// multilinearly with like exponents collected (cancellation can empty a
// term). The E part multiplies as exponent 0.
PolynomialProductResult polynomial_nary_product(std::span<const MatrixPolynomial> args);

// Degree bookkeeping for an n-ary product of homogeneous components with
// powers ell_1..ell_n: the product lands in the component of power
// sum(ell_i) + 1 -- each factor contributes its own multiplications and
// the product application adds one more -- so its exponent is
// (sum(ell_i) + 1)*(n-1) + 1.
struct ComponentProductDegree {
  long exponent = 0;
  long power = 0;
};
ComponentProductDegree component_product_degree(std::span<const long> ells, int arity);

}  // namespace polygrade
