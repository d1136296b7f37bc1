#include "polygrade/zpoly.hpp"

#include "polygrade/tuples.hpp"

#include <algorithm>
#include <stdexcept>

namespace polygrade {
namespace {

void require_shape(const Int& a, const Int& b, int m_add, int n_mul, const char* op) {
  if (a < 0) {
    throw std::invalid_argument(std::string(op) + ": residue must be nonnegative");
  }
  if (b < 1) {
    throw std::invalid_argument(std::string(op) + ": modulus must be positive");
  }
  if (m_add < 2 || n_mul < 2) {
    throw std::invalid_argument(std::string(op) + ": arities must be at least 2");
  }
}

}  // namespace

ShapeInvariants shape_invariants(const Int& a, const Int& b, int m_add, int n_mul) {
  require_shape(a, b, m_add, n_mul, "shape_invariants");
  Rat ratio(a, b);
  ratio.canonicalize();
  ShapeInvariants inv;
  inv.I = ratio * (m_add - 1);
  inv.J = ratio * (int_pow(a, static_cast<unsigned long>(n_mul - 1)) - 1);
  return inv;
}

PolyadicIntegerRing::PolyadicIntegerRing(Int a, Int b, int m_add, int n_mul,
                                         ShapeInvariants invariants)
    : a_(std::move(a)),
      b_(std::move(b)),
      m_add_(m_add),
      n_mul_(n_mul),
      invariants_(std::move(invariants)) {}

PolyadicIntegerRing PolyadicIntegerRing::make(const Int& a, const Int& b, int m_add,
                                              int n_mul) {
  ShapeInvariants inv = shape_invariants(a, b, m_add, n_mul);
  if (!inv.admissible()) {
    throw ValidationError("polyadic integer ring " + a.get_str() + " mod " + b.get_str() +
                          " is not closed under (" + std::to_string(m_add) + "," +
                          std::to_string(n_mul) + ")-ary operations: I = " +
                          rat_str(inv.I) + ", J = " + rat_str(inv.J) +
                          " (both must be nonnegative integers)");
  }
  PolyadicIntegerRing ring(a, b, m_add, n_mul, std::move(inv));

  // Closure spot-test on a fixed spread of representatives; admissible
  // invariants make failure impossible, so a hit is an internal error.
  for (long base : {-2L, 0L, 3L}) {
    std::vector<Int> sum_args;
    for (int i = 0; i < m_add; ++i) sum_args.push_back(ring.representative(base + i));
    std::vector<Int> mul_args;
    for (int i = 0; i < n_mul; ++i) mul_args.push_back(ring.representative(base + i));
    if (!ring.contains(ring.add(sum_args)) || !ring.contains(ring.mul(mul_args))) {
      throw std::logic_error("polyadic integer ring: closure spot-test failed");
    }
  }
  return ring;
}

bool PolyadicIntegerRing::contains(const Int& y) const {
  Int r;
  mpz_mod(r.get_mpz_t(), Int(y - a_).get_mpz_t(), b_.get_mpz_t());
  return r == 0;
}

Int PolyadicIntegerRing::representative(const Int& k) const { return a_ + k * b_; }

Int PolyadicIntegerRing::add(std::span<const Int> args) const {
  if (static_cast<int>(args.size()) != m_add_) {
    throw std::invalid_argument("ring add: expected " + std::to_string(m_add_) +
                                " arguments, got " + std::to_string(args.size()));
  }
  Int sum = 0;
  for (const Int& y : args) {
    if (!contains(y)) {
      throw std::invalid_argument("ring add: " + y.get_str() + " is not in the class " +
                                  a_.get_str() + " mod " + b_.get_str());
    }
    sum += y;
  }
  if (!contains(sum)) {
    throw std::logic_error("ring add: sum left the class");
  }
  return sum;
}

Int PolyadicIntegerRing::mul(std::span<const Int> args) const {
  if (static_cast<int>(args.size()) != n_mul_) {
    throw std::invalid_argument("ring mul: expected " + std::to_string(n_mul_) +
                                " arguments, got " + std::to_string(args.size()));
  }
  Int product = 1;
  for (const Int& y : args) {
    if (!contains(y)) {
      throw std::invalid_argument("ring mul: " + y.get_str() + " is not in the class " +
                                  a_.get_str() + " mod " + b_.get_str());
    }
    product *= y;
  }
  if (!contains(product)) {
    throw std::logic_error("ring mul: product left the class");
  }
  return product;
}

Int PolyadicIntegerRing::additive_querelement(const Int& y) const {
  if (!contains(y)) {
    throw std::invalid_argument("additive_querelement: " + y.get_str() +
                                " is not in the class");
  }
  const Int q = y * (2 - m_add_);
  std::vector<Int> args(static_cast<std::size_t>(m_add_) - 1, y);
  args.push_back(q);
  if (add(args) != y) {
    throw std::logic_error("additive_querelement: defining equation failed");
  }
  return q;
}

MinimalArities minimal_arities(const Int& a, const Int& b, int cap) {
  if (cap < 2) {
    throw std::invalid_argument("minimal_arities: cap must be at least 2");
  }
  require_shape(a, b, 2, 2, "minimal_arities");
  MinimalArities out;
  out.cap = cap;
  for (int m = 2; m <= cap; ++m) {
    ShapeInvariants inv = shape_invariants(a, b, m, 2);
    if (rat_is_integral(inv.I) && inv.I >= 0) {
      out.m_add = m;
      break;
    }
  }
  for (int n = 2; n <= cap; ++n) {
    ShapeInvariants inv = shape_invariants(a, b, 2, n);
    if (rat_is_integral(inv.J) && inv.J >= 0) {
      out.n_mul = n;
      break;
    }
  }
  return out;
}

PolyadicIntegerRing grading_ring_for_polynomials(int algebra_arity, int n_mul) {
  if (algebra_arity < 2) {
    throw std::invalid_argument("grading_ring_for_polynomials: arity must be >= 2");
  }
  PolyadicIntegerRing ring =
      PolyadicIntegerRing::make(1, algebra_arity - 1, algebra_arity, n_mul);
  if (ring.invariants().I != 1 || ring.invariants().J != 0) {
    throw std::logic_error("grading_ring_for_polynomials: unexpected invariants");
  }
  return ring;
}

bool PolynomialGradingReport::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const PolynomialGradingEntry& e) { return e.ok; });
}

PolynomialGradingReport check_polynomial_grading(const MatrixPolynomial& poly,
                                                 const PolyadicIntegerRing& ring,
                                                 const EvalBudget& budget) {
  const int n = poly.arity;
  if (ring.add_arity() != n) {
    throw std::invalid_argument("check_polynomial_grading: ring addition arity " +
                                std::to_string(ring.add_arity()) +
                                " does not match polynomial arity " + std::to_string(n));
  }
  std::vector<long> exponents;
  exponents.reserve(poly.terms.size());
  for (const auto& [exponent, coeff] : poly.terms) {
    if (!BlockShiftMonomial{n, coeff, exponent}.admissible()) {
      throw std::invalid_argument("check_polynomial_grading: exponent " +
                                  std::to_string(exponent) +
                                  " is not admissible for arity " + std::to_string(n));
    }
    exponents.push_back(exponent);
  }

  PolynomialGradingReport report;
  report.power_rule_note =
      "resulting polyadic power = sum of factor powers + 1: the product application "
      "contributes one multiplication beyond those already inside the factors";
  if (exponents.empty()) return report;

  bool overflow = false;
  const std::uint64_t cost = checked_pow(exponents.size(), static_cast<std::uint64_t>(n),
                                         &overflow);
  charge_budget(budget, cost, overflow, "check_polynomial_grading");

  std::vector<int> choice(static_cast<std::size_t>(n), 0);
  do {
    PolynomialGradingEntry entry;
    std::vector<long> ells;
    std::vector<Int> summands;
    for (int c : choice) {
      const long d = exponents[static_cast<std::size_t>(c)];
      entry.exponents.push_back(d);
      ells.push_back((d - 1) / (n - 1));
      summands.emplace_back(d);
    }
    const ComponentProductDegree degree = component_product_degree(ells, n);
    entry.lhs_exponent = degree.exponent;
    entry.power = degree.power;
    entry.rhs_sum = ring.add(summands);
    entry.ok = Int(entry.lhs_exponent) == entry.rhs_sum;
    report.entries.push_back(std::move(entry));
  } while (next_tuple(choice, static_cast<int>(exponents.size())));
  return report;
}

}  // namespace polygrade
