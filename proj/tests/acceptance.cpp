// Acceptance gate: ten exact criteria over the library and the CLI, one
// PASS/FAIL line each. Exits nonzero if any criterion fails. Every
// expected value is inlined here or recomputed from an independent oracle
// loop; nothing is read back from the code under test.

#include "polygrade/fixtures.hpp"
#include "polygrade/json_io.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace polygrade;
namespace fx = polygrade::fixtures;

namespace {

struct Checks {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

bool run_criterion(int index, const char* label,
                   const std::function<void(Checks&)>& body) {
  Checks checks;
  try {
    body(checks);
  } catch (const std::exception& e) {
    checks.failures.push_back(std::string("unexpected exception: ") + e.what());
  }
  const bool ok = checks.failures.empty();
  std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", index, label);
  for (const auto& line : checks.notes) std::printf("        note: %s\n", line.c_str());
  for (const auto& line : checks.failures) std::printf("        %s\n", line.c_str());
  return ok;
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  const std::string command =
      "'" + std::string(POLYGRADE_CLI_PATH) + "' " + args + " 2>/dev/null";
  CliRun result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string rat_pair(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += rat_str(v[i]);
  }
  return out + ")";
}

// ----- criteria ------------------------------------------------------------

void coupled_power_pairs(Checks& c) {
  // ell_gp, ell_alg, n_gp, n_alg, w: all solutions of
  // ell_gp*(n_gp-1) == ell_alg*(n_alg-1) with 3 <= n <= 5, 1 <= ell <= 5,
  // n_gp != n_alg, ordered by (n_gp, n_alg, ell_gp).
  const long expected[8][5] = {
      {3, 2, 3, 4, 7},  {2, 1, 3, 5, 5},  {4, 2, 3, 5, 9},  {2, 3, 4, 3, 7},
      {4, 3, 4, 5, 13}, {1, 2, 5, 3, 5},  {2, 4, 5, 3, 9},  {3, 4, 5, 4, 13},
  };

  const std::vector<HigherPowerSolution> solved = solve_higher_power_pairs(5);
  c.expect(solved.size() == 8,
           "library: expected 8 solutions, got " + std::to_string(solved.size()));
  for (std::size_t i = 0; i < solved.size() && i < 8; ++i) {
    const auto& s = solved[i];
    const bool match = s.ell_gp == expected[i][0] && s.ell_alg == expected[i][1] &&
                       s.n_gp == expected[i][2] && s.n_alg == expected[i][3] &&
                       s.w == expected[i][4];
    c.expect(match, "library row " + std::to_string(i) + " differs");
  }

  const CliRun run = run_cli("quantize --pairs --max 5 --format json");
  c.expect(run.exit_code == 0,
           "cli exit code " + std::to_string(run.exit_code) + ", expected 0");
  const auto doc = nlohmann::json::parse(run.output, nullptr, false);
  if (doc.is_discarded()) {
    c.expect(false, "cli did not emit valid JSON");
    return;
  }
  const auto& solutions = doc.at("solutions");
  c.expect(solutions.size() == 8,
           "cli: expected 8 solutions, got " + std::to_string(solutions.size()));
  for (std::size_t i = 0; i < solutions.size() && i < 8; ++i) {
    const auto& s = solutions[i];
    const bool match = s.at("ell_gp") == expected[i][0] &&
                       s.at("ell_alg") == expected[i][1] &&
                       s.at("n_gp") == expected[i][2] &&
                       s.at("n_alg") == expected[i][3] && s.at("w") == expected[i][4];
    c.expect(match, "cli row " + std::to_string(i) + " differs");
  }
}

void nonderived_ternary_group(Checks& c) {
  const FiniteNaryGroup g = fx::nonderived_ternary_group();

  std::vector<int> oracle;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) oracle.push_back((x + y + z + 1) % 2);
  c.expect(g.cayley_table() == oracle, "value table differs from (x+y+z+1) mod 2");

  c.expect(validate_group(g).ok(), "axioms failed");
  c.expect(find_identities(g).empty(), "unexpected polyadic identity");
  c.expect(find_zeros(g).empty(), "unexpected polyadic zero");
  c.expect(querelement(g, 0) == 1 && querelement(g, 1) == 0,
           "querelements are not the swap 0 <-> 1");

  const DerivednessCertificate cert = derivedness_certificate(g);
  c.expect(!cert.has_identity && cert.gcd_value == 2 && cert.necessarily_nonderived,
           "derivedness certificate is not (no identity, gcd 2, nonderived)");
}

void composed_square(Checks& c) {
  const FiniteNaryGroup composed = compose_power(fx::nonderived_ternary_group(), 2);
  c.expect(composed.arity() == 5,
           "composed arity " + std::to_string(composed.arity()) + ", expected 5");
  c.expect(composed.is_affine() && composed.affine_shift() == 0,
           "composed law is not affine with shift 0");

  std::vector<int> plain;   // the doubled shift cancels mod 2
  std::vector<int> shifted; // the bundled 5-ary law keeps one shift
  for (int i = 0; i < 32; ++i) {
    int sum = 0;
    for (int bit = 0; bit < 5; ++bit) sum += (i >> (4 - bit)) & 1;
    plain.push_back(sum % 2);
    shifted.push_back((sum + 1) % 2);
  }
  c.expect(composed.cayley_table() == plain,
           "composed table differs from the plain parity oracle");

  const FiniteNaryGroup bundled = fx::fivary_grading_group();
  c.expect(bundled.cayley_table() == shifted,
           "bundled 5-ary table differs from the shifted parity oracle");
  c.expect(fx::fivary_grading_table() == shifted,
           "transcribed golden table differs from the shifted parity oracle");
  c.expect(composed.cayley_table() != bundled.cayley_table(),
           "composed square should differ from the bundled 5-ary law");
  c.expect(validate_group(bundled).ok(), "bundled 5-ary law failed the axioms");
}

void ternary_superalgebra(Checks& c) {
  const GradedAlgebra a3 = fx::ternary_superalgebra();
  c.expect(check_graded(a3).ok(), "ternary superalgebra is not graded");
  for (const auto& condition : fx::ternary_superalgebra_conditions()) {
    c.expect(component_product_contained(a3, condition.grades, condition.target),
             "ternary containment failed at target " + std::to_string(condition.target));
  }
  const StrongGradedReport strong = check_strongly_graded(a3);
  c.expect(!strong.ok(), "ternary superalgebra should not be strongly graded");
  bool found = false;
  for (const auto& d : strong.deficiencies) {
    if (d.grades == std::vector<int>{1, 1, 1} && d.target_grade == 1 &&
        d.achieved_rank == 0) {
      found = true;
    }
  }
  c.expect(found, "missing the all-odd span deficiency (1,1,1)");

  const GradedAlgebra a2 = fx::binary_superalgebra();
  c.expect(check_graded(a2).ok(), "binary superalgebra is not graded");
  for (const auto& condition : fx::binary_superalgebra_conditions()) {
    c.expect(component_product_contained(a2, condition.grades, condition.target),
             "binary containment failed at target " + std::to_string(condition.target));
  }
}

void strong_ternary_instance(Checks& c) {
  const GradedAlgebra a = fx::strong_ternary_instance();
  c.expect(check_strongly_graded(a).ok(), "instance is not strongly graded");
  for (const auto& condition : fx::nonderived_ternary_conditions()) {
    c.expect(component_product_contained(a, condition.grades, condition.target),
             "containment failed at target " + std::to_string(condition.target));
  }
  c.expect(support(a) == std::set<int>{0, 1}, "support is not the full carrier");

  const SupportAssertionReport assertion = check_support_assertion(a);
  c.expect(assertion.strongly_graded && assertion.support_size == 2 &&
               assertion.group_order == 2 && assertion.holds(),
           "support assertion does not hold with full support");
  const auto order = check_order_theorem(a);
  c.expect(order.has_value() && *order == 1,
           "group order 2 should decompose as 1*(2-1)+1");
}

void fivary_superalgebra(Checks& c) {
  const GradedAlgebra a5 = fx::fivary_superalgebra();
  c.expect(check_strongly_graded(a5).ok(), "5-ary instance is not strongly graded");
  const auto conditions = fx::fivary_superalgebra_conditions();
  c.expect(conditions.size() == 16,
           "expected 16 conditions, got " + std::to_string(conditions.size()));
  for (const auto& condition : conditions) {
    c.expect(component_product_contained(a5, condition.grades, condition.target),
             "containment failed at target " + std::to_string(condition.target));
  }
  c.expect(check_support_assertion(a5).holds(), "support assertion failed");
  const auto order = check_order_theorem(a5);
  c.expect(order.has_value() && *order == 1, "order theorem failed for |G|=2");

  // Two-fold words of the ternary instance are graded by the composed
  // square of its own grading operation, and by nothing shifted.
  const GradedAlgebra a3 = fx::strong_ternary_instance();
  const FiniteNaryGroup composed = compose_power(a3.group(), 2);
  const HigherPowerReport coherent = check_higher_power_graded(a3, 2, composed);
  c.expect(coherent.ok() && coherent.word_length == 5,
           "two-fold words are not graded by the composed square");
  const HigherPowerReport shifted =
      check_higher_power_graded(a3, 2, fx::fivary_grading_group());
  c.expect(shifted.violations.size() == 32,
           "expected all 32 words to violate the shifted 5-ary grading, got " +
               std::to_string(shifted.violations.size()));

  bool rejected = false;
  try {
    check_higher_power_graded(a3, 2, a3.group());  // arity 3 != word length 5
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  c.expect(rejected, "mismatched grading arity was not rejected");
}

void block_shift_matrices(Checks& c) {
  for (int n = 2; n <= 5; ++n) {
    const PolyadicIdentityReport report =
        polyadic_identity_check(n, default_probe_values());
    c.expect(report.identity_law_holds,
             "identity law failed at arity " + std::to_string(n));
    c.expect(report.e_equals_ordinary_identity == (n == 2),
             "E vs ordinary identity wrong at arity " + std::to_string(n));
  }

  // Querelement of X(x) at arity 3: exponent 1*(2-3) = -1, coefficient 1.
  const BlockShiftMonomial x3{3, Rat(1), 1};
  const BlockShiftMonomial quer = querelement_monomial(x3);
  c.expect(quer.exponent == -1 && quer.coeff == 1,
           "querelement of X(x) at arity 3 is not X(x^-1)");
  const Rat probe(2);
  const RatMatrix lhs = matrix_realization(x3, probe) * matrix_realization(x3, probe) *
                        matrix_realization(quer, probe);
  c.expect(lhs == matrix_realization(x3, probe),
           "quer law X(x) X(x) quer(X(x)) != X(x) at x=2");

  // Product law: coefficients multiply, exponents add, checked both
  // symbolically and against the matrix oracle.
  const std::vector<BlockShiftMonomial> factors = {
      {3, Rat(2), 1}, {3, Rat(-3), 3}, {3, Rat(1, 2), 5}};
  const BlockShiftMonomial product = nary_monomial_product(factors);
  c.expect(product.coeff == -3 && product.exponent == 9,
           "three-fold monomial product is not -3 X(x^9)");
  RatMatrix oracle = matrix_realization(factors[0], probe);
  oracle = oracle * matrix_realization(factors[1], probe);
  oracle = oracle * matrix_realization(factors[2], probe);
  c.expect(matrix_realization(product, probe) == oracle,
           "monomial product disagrees with the matrix oracle at x=2");
}

void top_monomial_component(Checks& c) {
  const std::array<long, 4> ells = {2, 3, 5, 6};
  const ComponentProductDegree degree = component_product_degree(ells, 4);
  c.expect(degree.exponent == 52 && degree.power == 17,
           "component of powers (2,3,5,6) at arity 4 is not exponent 52, power 17");

  // The four top-degree terms of the bundled polynomial multiply to
  // 3360 X(x^52): (-12)*7*5*(-8) = 3360 and 7+10+16+19 = 52.
  const MatrixPolynomial poly = fx::bundled_4ary_polynomial();
  std::vector<BlockShiftMonomial> monomials;
  for (const long exponent : {7L, 10L, 16L, 19L}) {
    const auto it = poly.terms.find(exponent);
    if (it == poly.terms.end()) {
      c.expect(false, "bundled polynomial is missing exponent " +
                          std::to_string(exponent));
      return;
    }
    monomials.push_back(BlockShiftMonomial{poly.arity, it->second, exponent});
  }
  const BlockShiftMonomial top = nary_monomial_product(monomials);
  c.expect(top.coeff == 3360 && top.exponent == 52,
           "top monomial product is not 3360 X(x^52), got " + rat_str(top.coeff) +
               " X(x^" + std::to_string(top.exponent) + ")");
  c.expect(top.admissible(), "exponent 52 should be admissible at arity 4");

  const PolynomialGradingReport grading =
      check_polynomial_grading(poly, fx::bundled_4_7_ring());
  c.expect(grading.ok(), "exponent grading run has inconsistent entries");
  c.expect(grading.entries.size() == 256,
           "expected 256 exponent tuples, got " +
               std::to_string(grading.entries.size()));
  bool found = false;
  for (const auto& entry : grading.entries) {
    if (entry.exponents == std::vector<long>{7, 10, 16, 19}) {
      found = entry.lhs_exponent == 52 && entry.rhs_sum == 52 && entry.power == 17;
    }
  }
  c.expect(found, "entry (7,10,16,19) -> 52/52, power 17 not found");
  c.expect(grading.power_rule_note.find("sum of factor powers + 1") !=
               std::string::npos,
           "power rule note missing");
}

void graded_homomorphisms(Checks& c) {
  const GradedAlgebra a3 = fx::ternary_superalgebra();
  for (const Rat& scale : {Rat(1), Rat(5), Rat(-2)}) {
    const GradedHomReport report =
        check_graded_homomorphism(fx::even_scaling_hom(scale), a3, a3);
    c.expect(report.ok(), "scaling by " + rat_str(scale) + " failed: " +
                              report.summary());
  }

  const GradedHomReport mixing =
      check_graded_homomorphism(fx::grade_mixing_hom(), a3, a3);
  c.expect(!mixing.ok(), "grade-mixing map should fail");
  c.expect(mixing.additive.ok(), "grade-mixing map should still be additive");
  c.expect(mixing.group_hom.ok(), "grade-mixing map should still be a group hom");
  c.expect(mixing.grading.violations.size() == 1,
           "expected exactly one grading violation, got " +
               std::to_string(mixing.grading.violations.size()));
  if (mixing.grading.violations.size() == 1) {
    const auto& v = mixing.grading.violations.front();
    c.expect(v.basis_index == 0 && v.source_degree == 0 && v.target_degree == 0 &&
                 v.image == Vector{Rat(1), Rat(1)},
             "grading violation is not (u, degree 0, image (1, 1))");
  }
  if (!mixing.multiplicative.ok()) {
    const auto& v = mixing.multiplicative.violations.front();
    c.note("multiplicativity also fails at the all-u product: phi(product) = " +
           rat_pair(v.lhs) + ", product of images = " + rat_pair(v.rhs));
  }
}

void serialization_round_trips(Checks& c) {
  const auto survives = [&](const std::string& label, const std::string& first,
                            const std::string& second) {
    c.expect(first == second, label + " round-trip is not byte-identical");
  };

  const std::string group_text = group_to_json(fx::nonderived_ternary_group());
  survives("group", group_text, group_to_json(group_from_json(group_text)));

  const std::string algebra_text = algebra_to_json(fx::ternary_superalgebra());
  survives("algebra", algebra_text, algebra_to_json(algebra_from_json(algebra_text)));

  const std::string poly_text = polynomial_to_json(fx::bundled_4ary_polynomial());
  survives("polynomial", poly_text,
           polynomial_to_json(polynomial_from_json(poly_text)));

  const std::string ring_text = ring_to_json(fx::bundled_4_7_ring());
  survives("ring", ring_text, ring_to_json(ring_from_json(ring_text)));

  const std::string hom_text = hom_to_json(fx::even_scaling_hom(Rat(5, 3)));
  survives("homomorphism", hom_text, hom_to_json(hom_from_json(hom_text)));
}

}  // namespace

int main() {
  int failed = 0;
  const auto gate = [&](int index, const char* label,
                        const std::function<void(Checks&)>& body) {
    if (!run_criterion(index, label, body)) ++failed;
  };

  gate(1, "coupled power pair enumeration (library and CLI)", coupled_power_pairs);
  gate(2, "nonderived ternary group on two elements", nonderived_ternary_group);
  gate(3, "composed square vs the bundled 5-ary law", composed_square);
  gate(4, "ternary superalgebra: graded but not strongly", ternary_superalgebra);
  gate(5, "strongly graded ternary instance", strong_ternary_instance);
  gate(6, "5-ary instance and higher-power word grading", fivary_superalgebra);
  gate(7, "block-shift identities, querelements, products", block_shift_matrices);
  gate(8, "top monomial component 3360 X(x^52)", top_monomial_component);
  gate(9, "graded homomorphisms: scalings pass, mixing fails", graded_homomorphisms);
  gate(10, "serialization round-trips", serialization_round_trips);

  if (failed == 0) {
    std::printf("acceptance: 10 criteria, all passed\n");
    return 0;
  }
  std::printf("acceptance: %d of 10 criteria FAILED\n", failed);
  return 1;
}
