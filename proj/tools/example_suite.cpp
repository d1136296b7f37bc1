#include "example_suite.hpp"

#include "polygrade/arity.hpp"
#include "polygrade/blockshift.hpp"
#include "polygrade/fixtures.hpp"
#include "polygrade/graded_algebra.hpp"
#include "polygrade/homs.hpp"
#include "polygrade/json_io.hpp"
#include "polygrade/nary_group.hpp"
#include "polygrade/zpoly.hpp"

#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using njson = nlohmann::ordered_json;
using namespace polygrade;
namespace fx = polygrade::fixtures;

class SuiteLog {
 public:
  void section(const std::string& name) {
    sections_.push_back(njson{{"name", name}, {"checks", njson::array()}});
    text_ << "== " << name << " ==\n";
  }

  void check(const std::string& name, bool ok) {
    sections_.back()["checks"].push_back(njson{{"name", name}, {"ok", ok}});
    text_ << (ok ? "ok:   " : "FAIL: ") << name << "\n";
    ++total_;
    failed_ += ok ? 0 : 1;
  }

  int finish(bool json_output) {
    std::ostringstream tail;
    if (failed_ == 0) {
      tail << "paper-suite: " << total_ << " checks, all passed\n";
    } else {
      tail << "paper-suite: " << total_ << " checks, " << failed_ << " FAILED\n";
    }
    if (json_output) {
      njson doc{{"command", "paper-suite"},
                {"sections", sections_},
                {"checks", total_},
                {"failed", failed_},
                {"ok", failed_ == 0}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << text_.str() << tail.str();
    }
    return failed_ == 0 ? 0 : 1;
  }

 private:
  njson sections_ = njson::array();
  std::ostringstream text_;
  int total_ = 0;
  int failed_ = 0;
};

bool conditions_hold(const GradedAlgebra& a,
                     const std::vector<fx::GradingCondition>& conditions,
                     const EvalBudget& budget) {
  for (const auto& c : conditions) {
    if (!component_product_contained(a, c.grades, c.target, 1, budget)) return false;
  }
  return true;
}

}  // namespace

int run_example_suite(bool json_output, const polygrade::EvalBudget& budget) {
  SuiteLog log;

  // ---- word-length arithmetic ---------------------------------------------
  log.section("word-length arithmetic");
  log.check("a power-2 word of a 4-ary product has length 7",
            word_length(2, 4) == 7 && power_for_length(7, 4) == 2);
  log.check("length 8 is not quantized for arity 4", !power_for_length(8, 4));
  log.check("coupled-power solutions up to 5 match the bundled table",
            solve_higher_power_pairs(5) == fx::higher_power_solution_table());

  // ---- nonderived ternary group ---------------------------------------------
  log.section("nonderived ternary group");
  const FiniteNaryGroup g3 = fx::nonderived_ternary_group();
  log.check("value table matches the bundled golden table",
            g3.cayley_table(budget) == fx::nonderived_ternary_table());
  log.check("the axioms hold", validate_group(g3, budget).ok());
  log.check("no identity element", find_identities(g3, budget).empty());
  log.check("no zero element", find_zeros(g3, budget).empty());
  log.check("querelements are 0->1 and 1->0",
            querelement(g3, 0) == 1 && querelement(g3, 1) == 0);
  const DerivednessCertificate cert3 = derivedness_certificate(g3, budget);
  log.check("gcd 2 with no identity certifies a nonderived law",
            cert3.gcd_value == 2 && !cert3.has_identity && cert3.necessarily_nonderived);

  // ---- composed powers --------------------------------------------------------
  log.section("composed powers");
  const FiniteNaryGroup composed = compose_power(g3, 2, budget);
  log.check("squaring the ternary law gives a 5-ary law",
            composed.arity() == 5 && composed.carrier_size() == 2);
  log.check("the composed shift doubles to 0 mod 2",
            composed.is_affine() && composed.affine_shift() == 0);
  log.check("the composed law is again a valid group", validate_group(composed, budget).ok());
  const FiniteNaryGroup table_version = FiniteNaryGroup::unchecked(
      2, 3, TableLaw{fx::nonderived_ternary_table()});
  log.check("composing the table form agrees with the affine form",
            same_operation(compose_power(table_version, 2, budget), composed, budget));
  const FiniteNaryGroup g5 = fx::fivary_grading_group();
  log.check("the bundled 5-ary law matches its golden table",
            g5.cayley_table(budget) == fx::fivary_grading_table());
  log.check("the bundled 5-ary law shifts by 1, not 0: it differs from the composed law",
            !same_operation(composed, g5, budget));
  const DerivednessCertificate cert5 = derivedness_certificate(g5, budget);
  log.check("the 5-ary law is likewise necessarily nonderived",
            cert5.gcd_value == 2 && cert5.necessarily_nonderived);

  // ---- ternary superalgebra ---------------------------------------------------
  log.section("ternary superalgebra");
  const GradedAlgebra super3 = fx::ternary_superalgebra();
  log.check("products stay in the components named by the grading law",
            check_graded(super3, budget).ok());
  log.check("all four containment conditions hold",
            conditions_hold(super3, fx::ternary_superalgebra_conditions(), budget));
  const StrongGradedReport strong3 = check_strongly_graded(super3, budget);
  bool theta_deficiency = false;
  for (const auto& d : strong3.deficiencies) {
    theta_deficiency = theta_deficiency ||
                       (d.grades == std::vector<int>{1, 1, 1} && d.achieved_rank == 0 &&
                        d.required_dim == 1);
  }
  log.check("not strongly graded: theta-only products span nothing",
            !strong3.ok() && theta_deficiency);
  const GradedAlgebra super2 = fx::binary_superalgebra();
  log.check("the binary superalgebra is graded the same way",
            check_graded(super2, budget).ok() &&
                conditions_hold(super2, fx::binary_superalgebra_conditions(), budget));

  // ---- strongly graded ternary instance ------------------------------------------
  log.section("strongly graded ternary instance");
  const GradedAlgebra strong_inst = fx::strong_ternary_instance();
  log.check("products stay in their components", check_graded(strong_inst, budget).ok());
  log.check("all eight containment conditions hold",
            conditions_hold(strong_inst, fx::nonderived_ternary_conditions(), budget));
  log.check("component products span their targets",
            check_strongly_graded(strong_inst, budget).ok());
  const SupportAssertionReport support_report = check_support_assertion(strong_inst, budget);
  log.check("the support exhausts the grading group",
            support_report.strongly_graded && support_report.support_size == 2 &&
                support_report.holds());
  log.check("the group order 2 decomposes as 1*(2-1)+1",
            check_order_theorem(strong_inst) == 1);

  // ---- 5-ary superalgebra and higher powers ----------------------------------------
  log.section("5-ary superalgebra and higher powers");
  const GradedAlgebra super5 = fx::fivary_superalgebra();
  log.check("products stay in their components", check_graded(super5, budget).ok());
  log.check("all sixteen containment conditions hold",
            conditions_hold(super5, fx::fivary_superalgebra_conditions(), budget));
  log.check("strongly graded with full support",
            check_strongly_graded(super5, budget).ok() &&
                check_support_assertion(super5, budget).holds());
  const HigherPowerReport self_graded = check_higher_power_graded(
      strong_inst, 2, composed, HigherPowerNesting::require_associative, budget);
  log.check("two-fold words of the ternary instance are graded by the composed law",
            self_graded.ok() && self_graded.word_length == 5);
  const HigherPowerReport cross_graded = check_higher_power_graded(
      strong_inst, 2, g5, HigherPowerNesting::require_associative, budget);
  log.check("against the bundled 5-ary law every word misses by the extra shift",
            !cross_graded.ok() && cross_graded.violations.size() == 32);
  log.check("two-fold word spans are full against the composed law",
            check_higher_power_strongly_graded(strong_inst, 2, composed,
                                               HigherPowerNesting::require_associative,
                                               budget)
                .ok());

  // ---- block-shift matrices ----------------------------------------------------------
  log.section("block-shift matrices");
  bool identity_ok = true;
  for (int n = 2; n <= 5; ++n) {
    identity_ok = identity_ok && polyadic_identity_check(n, default_probe_values()).ok(n);
  }
  log.check("(n-1) copies of E absorb into any X(x) for arities 2..5", identity_ok);
  const BlockShiftMonomial x3{3, Rat(1), 1};
  const BlockShiftMonomial q3 = querelement_monomial(x3);
  std::vector<BlockShiftMonomial> quer_word{x3, x3, q3};
  log.check("the querelement of X(x) at arity 3 is X(x^-1)",
            q3.exponent == -1 && q3.coeff == 1 &&
                nary_monomial_product(quer_word) == x3);
  const BlockShiftMonomial heavy{4, Rat(2), 4};
  const BlockShiftMonomial heavy_quer = querelement_monomial(heavy);
  log.check("the querelement of 2X^4 at arity 4 has exponent -8 and coefficient 1/4",
            heavy_quer.exponent == -8 && heavy_quer.coeff == Rat(1, 4));

  const MatrixPolynomial poly = fx::bundled_4ary_polynomial();
  std::vector<BlockShiftMonomial> bundle;
  for (const auto& [exponent, coeff] : poly.terms) {
    bundle.push_back(BlockShiftMonomial{poly.arity, coeff, exponent});
  }
  const BlockShiftMonomial bundle_product = nary_monomial_product(bundle);
  log.check("the four bundled X terms multiply to 3360*X^52",
            bundle_product.coeff == 3360 && bundle_product.exponent == 52 &&
                bundle_product.admissible());
  log.check("exponent 52 carries polyadic power 17",
            power_for_length(52, 4) == 17);

  const MatrixPolynomial e_plus_x = MatrixPolynomial::make(3, Rat(1), {{1, Rat(1)}});
  const std::vector<MatrixPolynomial> cube(3, e_plus_x);
  const PolynomialProductResult cube_product = polynomial_nary_product(cube);
  log.check("(E + X)^3 at arity 3 leaves the admissible exponent set at X^2",
            cube_product.non_admissible_exponents == std::vector<long>{2});

  const std::vector<MatrixPolynomial> four(4, poly);
  const PolynomialProductResult self4 = polynomial_nary_product(four);
  bool oracle_ok = true;
  for (const Rat& x : default_probe_values()) {
    RatMatrix acc = polynomial_realization(poly, x);
    for (int i = 1; i < 4; ++i) acc = acc * polynomial_realization(poly, x);
    oracle_ok = oracle_ok && acc == polynomial_realization(self4.product, x);
  }
  log.check("the 4-fold self-product matches the matrix oracle at 1, 2, 3/2", oracle_ok);

  // ---- polyadic integer grading ---------------------------------------------------------
  log.section("polyadic integer grading");
  const PolyadicIntegerRing ring = fx::bundled_4_7_ring();
  log.check("the class 1 mod 3 with (4,7)-ary operations has I=1 and J=0",
            ring.invariants().I == 1 && ring.invariants().J == 0);
  const MinimalArities minimal = minimal_arities(2, 3);
  log.check("the class 2 mod 3 first closes at (m,n) = (4,3)",
            minimal.m_add == 4 && minimal.n_mul == 3);
  const PolynomialGradingReport grading = check_polynomial_grading(poly, ring, budget);
  log.check("all 256 exponent tuples of the bundled polynomial grade consistently",
            grading.ok() && grading.entries.size() == 256);
  log.check("the report names the extra product application in its power rule",
            grading.power_rule_note.find("+ 1") != std::string::npos);

  // ---- graded homomorphisms ------------------------------------------------------------
  log.section("graded homomorphisms");
  bool scaling_ok = true;
  for (const Rat& c : {Rat(1), Rat(5), Rat(-2)}) {
    scaling_ok = scaling_ok &&
                 check_graded_homomorphism(fx::even_scaling_hom(c), super3, super3, budget).ok();
  }
  log.check("scaling theta by 1, 5, or -2 passes all four checks", scaling_ok);
  const GradedHomReport mixing =
      check_graded_homomorphism(fx::grade_mixing_hom(), super3, super3, budget);
  log.check("the grade-mixing map is still additive and a group homomorphism",
            mixing.additive.ok() && mixing.group_hom.ok());
  log.check("the grade-mixing map fails grading preservation exactly at u",
            mixing.grading.violations.size() == 1 &&
                mixing.grading.violations[0].basis_index == 0);
  bool mixing_mult_at_uuu = false;
  for (const auto& v : mixing.multiplicative.violations) {
    mixing_mult_at_uuu = mixing_mult_at_uuu || v.args == std::vector<int>{0, 0, 0};
  }
  log.check("it also breaks multiplicativity, first at the all-u product",
            !mixing.multiplicative.ok() && mixing_mult_at_uuu);
  const GradedHomomorphism six = compose(fx::even_scaling_hom(2), fx::even_scaling_hom(3));
  log.check("composing the scalings by 2 and 3 gives the scaling by 6",
            six.phi_rows == fx::even_scaling_hom(6).phi_rows &&
                six.psi == fx::even_scaling_hom(6).psi);

  // ---- serialization ----------------------------------------------------------------------
  log.section("serialization");
  const std::string group_text = group_to_json(g3);
  log.check("group JSON round-trips byte-identically",
            group_to_json(group_from_json(group_text)) == group_text);
  const std::string algebra_text = algebra_to_json(super3);
  log.check("algebra JSON round-trips byte-identically",
            algebra_to_json(algebra_from_json(algebra_text)) == algebra_text);
  const std::string poly_text = polynomial_to_json(poly);
  log.check("polynomial JSON round-trips byte-identically",
            polynomial_to_json(polynomial_from_json(poly_text)) == poly_text);
  const std::string ring_text = ring_to_json(ring);
  log.check("ring JSON round-trips byte-identically",
            ring_to_json(ring_from_json(ring_text)) == ring_text);
  const std::string hom_text = hom_to_json(fx::even_scaling_hom(Rat(5, 3)));
  log.check("homomorphism JSON round-trips byte-identically",
            hom_to_json(hom_from_json(hom_text)) == hom_text);

  return log.finish(json_output);
}
