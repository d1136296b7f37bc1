#include "polygrade/graded_algebra.hpp"

#include "polygrade/arity.hpp"
#include "polygrade/ratlinalg.hpp"
#include "polygrade/tuples.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace polygrade {
namespace {

std::uint64_t charged_cube(const EvalBudget& budget, int base, int k,
                           const std::string& op) {
  bool overflow = false;
  const std::uint64_t cost =
      checked_pow(static_cast<std::uint64_t>(base), static_cast<std::uint64_t>(k),
                  &overflow);
  charge_budget(budget, cost, overflow, op);
  return cost;
}

std::vector<int> degrees_of(const GradedAlgebra& a, std::span<const int> indices) {
  std::vector<int> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(a.degree(i));
  return out;
}

void append_violations(const GradedAlgebra& a, std::span<const int> args,
                       const Vector& product, int expected,
                       std::vector<GradingViolation>& sink) {
  for (int j = 0; j < a.dim(); ++j) {
    if (product[j] != 0 && a.degree(j) != expected) {
      sink.push_back(GradingViolation{{args.begin(), args.end()}, j, expected,
                                      a.degree(j)});
    }
  }
}

// Spanning side of a strong-grading check: products of basis vectors drawn
// from the factor components must span the target component. Shared by the
// one-application and word-length variants.
void check_spanning(const GradedAlgebra& a, std::span<const int> grades, int target,
                    long ell, std::vector<SpanDeficiency>& sink) {
  const std::vector<int> target_component = a.component(target);
  const std::size_t required = target_component.size();
  if (required == 0) return;

  std::vector<std::vector<int>> factors;
  factors.reserve(grades.size());
  bool empty_factor = false;
  for (int g : grades) {
    factors.push_back(a.component(g));
    if (factors.back().empty()) empty_factor = true;
  }
  if (empty_factor) {
    sink.push_back(SpanDeficiency{{grades.begin(), grades.end()}, target, 0, required,
                                  true});
    return;
  }

  std::vector<int> sizes;
  sizes.reserve(factors.size());
  for (const auto& f : factors) sizes.push_back(static_cast<int>(f.size()));

  std::vector<std::vector<Rat>> rows;
  std::vector<int> choice(grades.size(), 0);
  std::vector<int> word(grades.size());
  do {
    for (std::size_t k = 0; k < choice.size(); ++k) word[k] = factors[k][choice[k]];
    std::vector<Vector> vectors;
    vectors.reserve(word.size());
    for (int i : word) vectors.push_back(a.basis_vector(i));
    const Vector product = ell == 1 ? nary_multiply(a, vectors)
                                    : word_product(a, vectors);
    std::vector<Rat> projected;
    projected.reserve(required);
    for (int j : target_component) projected.push_back(product[j]);
    rows.push_back(std::move(projected));
  } while (next_tuple(choice, sizes));

  const std::size_t rank = rat_rank(std::move(rows));
  if (rank < required) {
    sink.push_back(SpanDeficiency{{grades.begin(), grades.end()}, target, rank, required,
                                  false});
  }
}

}  // namespace

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

GradedAlgebra::GradedAlgebra(std::vector<std::string> basis, int mul_arity, int add_arity,
                             std::map<std::vector<int>, Vector> structure,
                             FiniteNaryGroup group, std::vector<int> degrees)
    : basis_(std::move(basis)),
      mul_arity_(mul_arity),
      add_arity_(add_arity),
      structure_(std::move(structure)),
      group_(std::move(group)),
      degrees_(std::move(degrees)) {
  if (basis_.empty()) throw ValidationError("algebra: empty basis");
  if (mul_arity_ < 2) throw ValidationError("algebra: multiplication arity must be >= 2");
  if (add_arity_ < 2) throw ValidationError("algebra: addition arity must be >= 2");
  std::set<std::string> seen;
  for (const auto& label : basis_) {
    if (label.empty()) throw ValidationError("algebra: empty basis label");
    if (!seen.insert(label).second) {
      throw ValidationError("algebra: duplicate basis label '" + label + "'");
    }
  }
  if (degrees_.size() != basis_.size()) {
    throw ValidationError("algebra: degree map covers " +
                          std::to_string(degrees_.size()) + " of " +
                          std::to_string(basis_.size()) + " basis vectors");
  }
  for (int d : degrees_) {
    if (d < 0 || d >= group_.carrier_size()) {
      throw ValidationError("algebra: degree " + std::to_string(d) +
                            " outside the grading carrier");
    }
  }
  for (auto it = structure_.begin(); it != structure_.end();) {
    const auto& [args, out] = *it;
    if (static_cast<int>(args.size()) != mul_arity_) {
      throw ValidationError("algebra: structure tuple of length " +
                            std::to_string(args.size()) + ", multiplication arity is " +
                            std::to_string(mul_arity_));
    }
    for (int i : args) {
      if (i < 0 || i >= dim()) {
        throw ValidationError("algebra: structure tuple index " + std::to_string(i) +
                              " outside basis");
      }
    }
    if (out.size() != basis_.size()) {
      throw ValidationError("algebra: structure value of length " +
                            std::to_string(out.size()) + ", dimension is " +
                            std::to_string(basis_.size()));
    }
    it = is_zero_vector(out) ? structure_.erase(it) : std::next(it);
  }
}

std::vector<int> GradedAlgebra::component(int g) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    if (degrees_[i] == g) out.push_back(i);
  }
  return out;
}

Vector GradedAlgebra::basis_vector(int i) const {
  if (i < 0 || i >= dim()) throw std::invalid_argument("basis_vector: index out of range");
  Vector v = zero();
  v[i] = 1;
  return v;
}

Vector GradedAlgebra::basis_product(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != mul_arity_) {
    throw std::invalid_argument("basis_product: expected " + std::to_string(mul_arity_) +
                                " indices");
  }
  const auto it = structure_.find(std::vector<int>(indices.begin(), indices.end()));
  return it == structure_.end() ? zero() : it->second;
}

Vector nary_multiply(const GradedAlgebra& a, std::span<const Vector> args) {
  if (static_cast<int>(args.size()) != a.mul_arity()) {
    throw std::invalid_argument("nary_multiply: expected " +
                                std::to_string(a.mul_arity()) + " vectors, got " +
                                std::to_string(args.size()));
  }
  for (const Vector& v : args) {
    if (static_cast<int>(v.size()) != a.dim()) {
      throw std::invalid_argument("nary_multiply: vector of length " +
                                  std::to_string(v.size()) + ", dimension is " +
                                  std::to_string(a.dim()));
    }
  }
  Vector out = a.zero();
  for (const auto& [tuple, value] : a.structure()) {
    Rat coeff = 1;
    for (std::size_t k = 0; k < tuple.size() && coeff != 0; ++k) {
      coeff *= args[k][tuple[k]];
    }
    if (coeff == 0) continue;
    for (int j = 0; j < a.dim(); ++j) out[j] += coeff * value[j];
  }
  return out;
}

Vector mary_add(const GradedAlgebra& a, std::span<const Vector> args) {
  if (static_cast<int>(args.size()) != a.add_arity()) {
    throw std::invalid_argument("mary_add: expected " + std::to_string(a.add_arity()) +
                                " vectors, got " + std::to_string(args.size()));
  }
  Vector out = a.zero();
  for (const Vector& v : args) {
    if (static_cast<int>(v.size()) != a.dim()) {
      throw std::invalid_argument("mary_add: vector of wrong length");
    }
    for (int j = 0; j < a.dim(); ++j) out[j] += v[j];
  }
  return out;
}

Vector word_product(const GradedAlgebra& a, std::span<const Vector> word) {
  const int n = a.mul_arity();
  const auto ell = power_for_length(static_cast<long>(word.size()), n);
  if (!ell) {
    throw std::invalid_argument("word_product: " + std::to_string(word.size()) +
                                " vectors is not a quantized word length for arity " +
                                std::to_string(n));
  }
  if (*ell == 0) return word[0];
  std::vector<Vector> args(word.begin(), word.begin() + n);
  Vector acc = nary_multiply(a, args);
  std::size_t pos = n;
  while (pos < word.size()) {
    args[0] = std::move(acc);
    for (int i = 1; i < n; ++i) args[i] = word[pos + i - 1];
    acc = nary_multiply(a, args);
    pos += n - 1;
  }
  return acc;
}

AlgebraAssociativityResult is_algebra_totally_associative(const GradedAlgebra& a,
                                                          const EvalBudget& budget) {
  const int n = a.mul_arity();
  const int w = 2 * (n - 1) + 1;
  charged_cube(budget, a.dim(), w, "is_algebra_totally_associative");

  std::vector<int> word(w, 0);
  do {
    std::optional<Vector> base;
    for (int p = 0; p < n; ++p) {
      std::vector<Vector> outer;
      outer.reserve(n);
      for (int i = 0; i < p; ++i) outer.push_back(a.basis_vector(word[i]));
      outer.push_back(a.basis_product(std::span<const int>(word).subspan(p, n)));
      for (int i = p + n; i < w; ++i) outer.push_back(a.basis_vector(word[i]));
      Vector value = nary_multiply(a, outer);
      if (!base) {
        base = std::move(value);
      } else if (value != *base) {
        return {false, AlgebraAssociativityWitness{word, 0, p, *base, value}};
      }
    }
  } while (next_tuple(word, a.dim()));
  return {true, std::nullopt};
}

GradedCheckReport check_graded(const GradedAlgebra& a, const EvalBudget& budget) {
  GradedCheckReport report;
  report.group_arity = a.group().arity();
  report.mul_arity = a.mul_arity();
  if (report.group_arity != report.mul_arity) {
    report.arity_mismatch = true;
    return report;
  }
  charge_budget(budget, a.structure().size(), false, "check_graded");
  for (const auto& [args, value] : a.structure()) {
    const std::vector<int> degs = degrees_of(a, args);
    const int expected = a.group().apply(degs);
    append_violations(a, args, value, expected, report.violations);
  }
  return report;
}

StrongGradedReport check_strongly_graded(const GradedAlgebra& a,
                                         const EvalBudget& budget) {
  StrongGradedReport report;
  report.inclusion = check_graded(a, budget);
  if (report.inclusion.arity_mismatch) return report;

  const int n = a.mul_arity();
  const int carrier = a.group().carrier_size();
  charged_cube(budget, carrier * std::max(a.dim(), 1), n, "check_strongly_graded");

  std::vector<int> grades(n, 0);
  do {
    const int target = a.group().apply(grades);
    check_spanning(a, grades, target, 1, report.deficiencies);
  } while (next_tuple(grades, carrier));
  return report;
}

std::set<int> support(const GradedAlgebra& a) {
  return {a.degrees().begin(), a.degrees().end()};
}

SupportAssertionReport check_support_assertion(const GradedAlgebra& a,
                                               const EvalBudget& budget) {
  SupportAssertionReport report;
  report.strongly_graded = check_strongly_graded(a, budget).ok();
  report.support_size = support(a).size();
  report.group_order = a.group().carrier_size();
  return report;
}

long decomposition_length(const GradedAlgebra& a, long ell_m) {
  return word_length(ell_m, a.add_arity());
}

std::optional<long> check_order_theorem(const GradedAlgebra& a) {
  return power_for_length(a.group().carrier_size(), a.add_arity());
}

HigherPowerReport check_higher_power_graded(const GradedAlgebra& a, long ell_n,
                                            const FiniteNaryGroup& grading_op,
                                            HigherPowerNesting nesting,
                                            const EvalBudget& budget) {
  if (ell_n < 1) {
    throw std::invalid_argument("check_higher_power_graded: power must be >= 1");
  }
  const long w = word_length(ell_n, a.mul_arity());
  if (grading_op.arity() != w) {
    throw std::invalid_argument(
        "check_higher_power_graded: word length " + std::to_string(w) +
        " does not match grading arity " + std::to_string(grading_op.arity()));
  }
  if (ell_n >= 2 && nesting == HigherPowerNesting::require_associative) {
    if (!is_algebra_totally_associative(a, budget).ok) {
      throw ValidationError(
          "check_higher_power_graded: multiplication is not totally associative, so "
          "word products are placement-dependent; pass force_left to check the "
          "left-nested evaluation anyway");
    }
  }

  HigherPowerReport report;
  report.ell_n = ell_n;
  report.word_length = w;
  charged_cube(budget, a.dim(), static_cast<int>(w), "check_higher_power_graded");

  std::vector<int> word(w, 0);
  do {
    std::vector<Vector> vectors;
    vectors.reserve(word.size());
    for (int i : word) vectors.push_back(a.basis_vector(i));
    const Vector product = word_product(a, vectors);
    const int expected = grading_op.apply(degrees_of(a, word));
    append_violations(a, word, product, expected, report.violations);
  } while (next_tuple(word, a.dim()));
  return report;
}

HigherPowerStrongReport check_higher_power_strongly_graded(
    const GradedAlgebra& a, long ell_n, const FiniteNaryGroup& grading_op,
    HigherPowerNesting nesting, const EvalBudget& budget) {
  HigherPowerStrongReport report;
  report.inclusion = check_higher_power_graded(a, ell_n, grading_op, nesting, budget);

  const long w = report.inclusion.word_length;
  const int carrier = grading_op.carrier_size();
  charged_cube(budget, carrier * std::max(a.dim(), 1), static_cast<int>(w),
               "check_higher_power_strongly_graded");

  std::vector<int> grades(w, 0);
  do {
    const int target = grading_op.apply(grades);
    check_spanning(a, grades, target, ell_n, report.deficiencies);
  } while (next_tuple(grades, carrier));
  return report;
}

bool component_product_contained(const GradedAlgebra& a, std::span<const int> grades,
                                 int target, long ell, const EvalBudget& budget) {
  const long w = word_length(ell, a.mul_arity());
  if (static_cast<long>(grades.size()) != w) {
    throw std::invalid_argument("component_product_contained: expected " +
                                std::to_string(w) + " grades, got " +
                                std::to_string(grades.size()));
  }
  std::vector<std::vector<int>> factors;
  for (int g : grades) {
    factors.push_back(a.component(g));
    if (factors.back().empty()) return true;
  }
  std::uint64_t combinations = 1;
  bool overflow = false;
  for (const auto& f : factors) {
    const std::uint64_t s = f.size();
    if (s != 0 && combinations > UINT64_MAX / s) overflow = true;
    combinations *= s;
  }
  charge_budget(budget, combinations, overflow, "component_product_contained");

  const std::vector<int> allowed = a.component(target);
  std::vector<int> choice(factors.size(), 0);
  std::vector<int> sizes;
  sizes.reserve(factors.size());
  for (const auto& f : factors) sizes.push_back(static_cast<int>(f.size()));
  do {
    std::vector<Vector> vectors;
    vectors.reserve(choice.size());
    for (std::size_t k = 0; k < choice.size(); ++k) {
      vectors.push_back(a.basis_vector(factors[k][choice[k]]));
    }
    const Vector product = ell == 1 ? nary_multiply(a, vectors)
                                    : word_product(a, vectors);
    for (int j = 0; j < a.dim(); ++j) {
      if (product[j] != 0 &&
          std::find(allowed.begin(), allowed.end(), j) == allowed.end()) {
        return false;
      }
    }
  } while (next_tuple(choice, sizes));
  return true;
}

GradedAlgebra make_grassmann(int n_arity) {
  if (n_arity < 3 || n_arity % 2 == 0) {
    throw std::invalid_argument("make_grassmann: arity must be odd and >= 3, got " +
                                std::to_string(n_arity));
  }
  std::map<std::vector<int>, Vector> structure;
  std::vector<int> tuple(n_arity, 0);
  do {
    const int thetas = static_cast<int>(std::count(tuple.begin(), tuple.end(), 1));
    if (thetas == 0) {
      structure[tuple] = {Rat(1), Rat(0)};
    } else if (thetas == 1) {
      structure[tuple] = {Rat(0), Rat(1)};
    }
  } while (next_tuple(tuple, 2));
  FiniteNaryGroup group = FiniteNaryGroup::unchecked(2, n_arity, AffineLaw{0});
  return GradedAlgebra({"u", "theta"}, n_arity, 2, std::move(structure), std::move(group),
                       {0, 1});
}

}  // namespace polygrade
