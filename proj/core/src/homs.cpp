#include "polygrade/homs.hpp"

#include "polygrade/ratlinalg.hpp"
#include "polygrade/tuples.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polygrade {

Vector GradedHomomorphism::apply_phi(const Vector& v) const {
  if (phi_rows.empty()) throw std::logic_error("apply_phi: empty map");
  if (v.size() != phi_rows.size()) {
    throw std::invalid_argument("apply_phi: vector of length " +
                                std::to_string(v.size()) + ", map has " +
                                std::to_string(phi_rows.size()) + " rows");
  }
  Vector out(phi_rows.front().size(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * phi_rows[i][j];
  }
  return out;
}

int GradedHomomorphism::apply_psi(int g) const {
  if (g < 0 || g >= static_cast<int>(psi.size())) {
    throw std::invalid_argument("apply_psi: grade outside the source carrier");
  }
  return psi[static_cast<std::size_t>(g)];
}

void require_compatible(const GradedHomomorphism& hom, const GradedAlgebra& a,
                        const GradedAlgebra& b) {
  if (a.mul_arity() != b.mul_arity()) {
    throw std::invalid_argument("hom: multiplication arities differ (" +
                                std::to_string(a.mul_arity()) + " vs " +
                                std::to_string(b.mul_arity()) + ")");
  }
  if (a.add_arity() != b.add_arity()) {
    throw std::invalid_argument("hom: addition arities differ (" +
                                std::to_string(a.add_arity()) + " vs " +
                                std::to_string(b.add_arity()) + ")");
  }
  if (static_cast<int>(hom.phi_rows.size()) != a.dim()) {
    throw std::invalid_argument("hom: phi has " + std::to_string(hom.phi_rows.size()) +
                                " rows, source dimension is " + std::to_string(a.dim()));
  }
  for (const Vector& row : hom.phi_rows) {
    if (static_cast<int>(row.size()) != b.dim()) {
      throw std::invalid_argument("hom: phi row of length " + std::to_string(row.size()) +
                                  ", target dimension is " + std::to_string(b.dim()));
    }
  }
  if (static_cast<int>(hom.psi.size()) != a.group().carrier_size()) {
    throw std::invalid_argument("hom: psi covers " + std::to_string(hom.psi.size()) +
                                " grades, source carrier has " +
                                std::to_string(a.group().carrier_size()));
  }
  for (int v : hom.psi) {
    if (v < 0 || v >= b.group().carrier_size()) {
      throw std::invalid_argument("hom: psi value " + std::to_string(v) +
                                  " outside the target carrier");
    }
  }
}

bool AdditiveReport::ok() const {
  return std::all_of(samples.begin(), samples.end(),
                     [](const AdditiveSample& s) { return s.ok; });
}

AdditiveReport check_additive(const GradedHomomorphism& hom, const GradedAlgebra& a,
                              const GradedAlgebra& b) {
  require_compatible(hom, a, b);
  const int m = a.add_arity();
  const int dim = a.dim();

  // Deterministic sample tuples: shifted basis vectors, a constant ramp,
  // and scaled ramps with distinct rational weights.
  std::vector<std::vector<Vector>> families;
  for (int shift = 0; shift < std::min(dim, 3); ++shift) {
    std::vector<Vector> args;
    for (int k = 0; k < m; ++k) args.push_back(a.basis_vector((k + shift) % dim));
    families.push_back(std::move(args));
  }
  for (int scale = 1; scale <= 3; ++scale) {
    std::vector<Vector> args;
    for (int k = 0; k < m; ++k) {
      Vector v = a.zero();
      for (int j = 0; j < dim; ++j) {
        Rat q(scale * (j + 1), 1 + k + j);
        q.canonicalize();
        v[static_cast<std::size_t>(j)] = q;
      }
      args.push_back(std::move(v));
    }
    families.push_back(std::move(args));
  }

  AdditiveReport report;
  for (auto& args : families) {
    AdditiveSample sample;
    sample.lhs = hom.apply_phi(mary_add(a, args));
    std::vector<Vector> images;
    images.reserve(args.size());
    for (const Vector& v : args) images.push_back(hom.apply_phi(v));
    sample.rhs = mary_add(b, images);
    sample.ok = sample.lhs == sample.rhs;
    sample.args = std::move(args);
    report.samples.push_back(std::move(sample));
  }
  return report;
}

MultiplicativeReport check_multiplicative(const GradedHomomorphism& hom,
                                          const GradedAlgebra& a, const GradedAlgebra& b,
                                          const EvalBudget& budget) {
  require_compatible(hom, a, b);
  const int n = a.mul_arity();
  bool overflow = false;
  const std::uint64_t cost = checked_pow(static_cast<std::uint64_t>(a.dim()),
                                         static_cast<std::uint64_t>(n), &overflow);
  charge_budget(budget, cost, overflow, "check_multiplicative");

  MultiplicativeReport report;
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  do {
    const Vector lhs = hom.apply_phi(a.basis_product(tuple));
    std::vector<Vector> images;
    images.reserve(tuple.size());
    for (int i : tuple) images.push_back(hom.phi_rows[static_cast<std::size_t>(i)]);
    const Vector rhs = nary_multiply(b, images);
    if (lhs != rhs) {
      report.violations.push_back(MultiplicativeViolation{tuple, lhs, rhs});
    }
  } while (next_tuple(tuple, a.dim()));
  return report;
}

GroupHomReport check_group_hom(const GradedHomomorphism& hom, const FiniteNaryGroup& g,
                               const FiniteNaryGroup& h, const EvalBudget& budget) {
  GroupHomReport report;
  if (g.arity() != h.arity()) {
    report.arity_mismatch = true;
    return report;
  }
  if (static_cast<int>(hom.psi.size()) != g.carrier_size()) {
    throw std::invalid_argument("check_group_hom: psi covers " +
                                std::to_string(hom.psi.size()) +
                                " grades, carrier has " +
                                std::to_string(g.carrier_size()));
  }
  bool overflow = false;
  std::uint64_t cost = checked_pow(static_cast<std::uint64_t>(g.carrier_size()),
                                   static_cast<std::uint64_t>(g.arity()), &overflow);
  charge_budget(budget, cost, overflow, "check_group_hom");

  std::vector<int> tuple(static_cast<std::size_t>(g.arity()), 0);
  do {
    const int lhs = hom.apply_psi(g.apply(tuple));
    std::vector<int> mapped(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) mapped[i] = hom.apply_psi(tuple[i]);
    const int rhs = h.apply(mapped);
    if (lhs != rhs) {
      report.violations.push_back(GroupHomViolation{tuple, lhs, rhs});
    }
  } while (next_tuple(tuple, g.carrier_size()));
  return report;
}

GradingPreservationReport check_preserves_grading(const GradedHomomorphism& hom,
                                                  const GradedAlgebra& a,
                                                  const GradedAlgebra& b) {
  require_compatible(hom, a, b);
  GradingPreservationReport report;
  for (int i = 0; i < a.dim(); ++i) {
    const int g = a.degree(i);
    const int target = hom.apply_psi(g);
    std::vector<std::vector<Rat>> component_vectors;
    for (int j : b.component(target)) component_vectors.push_back(b.basis_vector(j));
    const Vector& image = hom.phi_rows[static_cast<std::size_t>(i)];
    if (!in_span(component_vectors, image)) {
      report.violations.push_back(GradingPreservationViolation{i, g, target, image});
    }
  }
  return report;
}

std::string GradedHomReport::summary() const {
  std::ostringstream os;
  os << "additive: " << (additive.ok() ? "pass" : "fail")
     << ", multiplicative: " << (multiplicative.ok() ? "pass" : "fail")
     << ", group hom: " << (group_hom.ok() ? "pass" : "fail")
     << ", grading: " << (grading.ok() ? "pass" : "fail");
  return os.str();
}

GradedHomReport check_graded_homomorphism(const GradedHomomorphism& hom,
                                          const GradedAlgebra& a, const GradedAlgebra& b,
                                          const EvalBudget& budget) {
  require_compatible(hom, a, b);
  GradedHomReport report;
  report.additive = check_additive(hom, a, b);
  report.multiplicative = check_multiplicative(hom, a, b, budget);
  report.group_hom = check_group_hom(hom, a.group(), b.group(), budget);
  report.grading = check_preserves_grading(hom, a, b);
  return report;
}

GradedHomomorphism compose(const GradedHomomorphism& hom2,
                           const GradedHomomorphism& hom1) {
  if (hom1.phi_rows.empty() || hom2.phi_rows.empty()) {
    throw std::invalid_argument("compose: empty map");
  }
  for (const Vector& row : hom1.phi_rows) {
    if (row.size() != hom2.phi_rows.size()) {
      throw std::invalid_argument("compose: inner dimensions differ");
    }
  }
  GradedHomomorphism out;
  for (const Vector& row : hom1.phi_rows) out.phi_rows.push_back(hom2.apply_phi(row));
  out.psi.reserve(hom1.psi.size());
  for (int g : hom1.psi) out.psi.push_back(hom2.apply_psi(g));
  return out;
}

}  // namespace polygrade
