#include "polygrade/arity.hpp"
#include "polygrade/blockshift.hpp"
#include "polygrade/fixtures.hpp"
#include "polygrade/graded_algebra.hpp"
#include "polygrade/homs.hpp"
#include "polygrade/json_io.hpp"
#include "polygrade/nary_group.hpp"
#include "polygrade/rational.hpp"
#include "polygrade/zpoly.hpp"

#include "example_suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using njson = nlohmann::ordered_json;
using namespace polygrade;

// Exit codes: 0 all checks pass, 1 checks ran and found violations,
// 2 unusable input (bad flags, malformed JSON, budget exhaustion).
constexpr int kPass = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

enum class Format { text, json };

struct GlobalOpts {
  Format format = Format::text;
  EvalBudget budget;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const GlobalOpts& opts, const std::string& text, const njson& doc) {
  if (opts.format == Format::json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string tuple_str(std::span<const int> t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

std::string vec_str(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(v[i]);
  }
  os << ')';
  return os.str();
}

njson rat_list_json(const Vector& v) {
  njson out = njson::array();
  for (const Rat& q : v) out.push_back(rat_str(q));
  return out;
}

std::string law_str(const FiniteNaryGroup& g) {
  if (g.is_affine()) return "affine(shift=" + std::to_string(g.affine_shift()) + ")";
  return "table";
}

// ---- shared group input -------------------------------------------------

struct GroupInput {
  std::string affine_spec;  // "N,ARITY,SHIFT"
  std::string input_path;
};

void add_group_input(CLI::App* cmd, GroupInput& in) {
  auto* affine = cmd->add_option("--affine", in.affine_spec,
                                 "group as N,ARITY,SHIFT for the law "
                                 "(x1+...+xn+SHIFT) mod N");
  auto* input = cmd->add_option("--input", in.input_path,
                                "group JSON file ('-' for stdin)");
  affine->excludes(input);
}

FiniteNaryGroup load_group(const GroupInput& in) {
  if (!in.affine_spec.empty()) {
    int n = 0, arity = 0;
    long shift = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(in.affine_spec);
    if (!(is >> n >> c1 >> arity >> c2 >> shift) || c1 != ',' || c2 != ',' ||
        !is.eof()) {
      throw std::invalid_argument("--affine expects N,ARITY,SHIFT, got '" +
                                  in.affine_spec + "'");
    }
    return FiniteNaryGroup::unchecked(n, arity, AffineLaw{shift});
  }
  if (!in.input_path.empty()) {
    return group_from_json(read_input(in.input_path));
  }
  throw std::invalid_argument("no group given: use --affine or --input");
}

// ---- witness serialization ----------------------------------------------

njson witness_json(const AssociativityWitness& w) {
  return njson{{"word", w.word},
               {"placement_a", w.placement_a},
               {"placement_b", w.placement_b},
               {"value_a", w.value_a},
               {"value_b", w.value_b}};
}

njson witness_json(const CommutativityWitness& w) {
  return njson{{"args", w.args},
               {"sorted_args", w.sorted_args},
               {"value", w.value},
               {"sorted_value", w.sorted_value}};
}

njson witness_json(const QuerelementWitness& w) {
  return njson{{"element", w.element}, {"solutions", w.solutions}};
}

njson violation_json(const GradingViolation& v) {
  return njson{{"args", v.args},
               {"out_index", v.out_index},
               {"expected_degree", v.expected_degree},
               {"actual_degree", v.actual_degree}};
}

njson deficiency_json(const SpanDeficiency& d) {
  return njson{{"grades", d.grades},
               {"target_grade", d.target_grade},
               {"achieved_rank", d.achieved_rank},
               {"required_dim", d.required_dim},
               {"empty_factor", d.empty_factor}};
}

void print_violations(std::ostream& os, const std::vector<GradingViolation>& violations) {
  for (const auto& v : violations) {
    os << "violation: product " << tuple_str(v.args) << " has coordinate " << v.out_index
       << " of degree " << v.actual_degree << ", expected degree " << v.expected_degree
       << "\n";
  }
}

void print_deficiencies(std::ostream& os, const std::vector<SpanDeficiency>& defs) {
  for (const auto& d : defs) {
    os << "deficiency: grades " << tuple_str(d.grades) << " span rank "
       << d.achieved_rank << " of " << d.required_dim << " in component "
       << d.target_grade;
    if (d.empty_factor) os << " (empty factor component)";
    os << "\n";
  }
}

// ---- quantize ------------------------------------------------------------

struct QuantizeOpts {
  int n = 0;
  std::optional<long> ell;
  std::optional<long> w;
  bool pairs = false;
  int max = 5;
};

int run_quantize(const GlobalOpts& g, const QuantizeOpts& q) {
  if (q.pairs) {
    const auto solutions = solve_higher_power_pairs(q.max);
    std::ostringstream os;
    os << "coupled powers ell_gp*(n_gp-1) == ell_alg*(n_alg-1), 3 <= n <= " << q.max
       << ", 1 <= ell <= " << q.max << ":\n";
    njson rows = njson::array();
    for (const auto& s : solutions) {
      os << "n_gp=" << s.n_gp << " ell_gp=" << s.ell_gp << " | n_alg=" << s.n_alg
         << " ell_alg=" << s.ell_alg << " | w=" << s.w << "\n";
      rows.push_back(njson{{"ell_gp", s.ell_gp},
                           {"ell_alg", s.ell_alg},
                           {"n_gp", s.n_gp},
                           {"n_alg", s.n_alg},
                           {"w", s.w}});
    }
    os << solutions.size() << " solutions\n";
    emit(g, os.str(),
         njson{{"command", "quantize"}, {"max", q.max}, {"solutions", rows}});
    return kPass;
  }

  if (q.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (q.ell.has_value() == q.w.has_value()) {
    throw std::invalid_argument("give exactly one of --ell and --w");
  }
  if (q.ell) {
    const long w = word_length(*q.ell, q.n);
    emit(g,
         "arity " + std::to_string(q.n) + ", power " + std::to_string(*q.ell) +
             " -> word length " + std::to_string(w) + "\n",
         njson{{"command", "quantize"},
               {"n", q.n},
               {"ell", *q.ell},
               {"w", w},
               {"quantized", true}});
    return kPass;
  }
  const auto ell = power_for_length(*q.w, q.n);
  if (!ell) {
    emit(g,
         "word length " + std::to_string(*q.w) + " is not quantized for arity " +
             std::to_string(q.n) + ": admissible lengths are ell*" +
             std::to_string(q.n - 1) + "+1\n",
         njson{{"command", "quantize"},
               {"n", q.n},
               {"w", *q.w},
               {"quantized", false}});
    return kViolations;
  }
  emit(g,
       "arity " + std::to_string(q.n) + ", word length " + std::to_string(*q.w) +
           " -> power " + std::to_string(*ell) + "\n",
       njson{{"command", "quantize"},
             {"n", q.n},
             {"ell", *ell},
             {"w", *q.w},
             {"quantized", true}});
  return kPass;
}

// ---- group-cayley ----------------------------------------------------------

int run_group_cayley(const GlobalOpts& g, const GroupInput& in) {
  const FiniteNaryGroup group = load_group(in);
  const std::vector<int> table = group.cayley_table(g.budget);

  std::ostringstream os;
  os << "N=" << group.carrier_size() << " arity=" << group.arity()
     << " law=" << law_str(group) << "\n";
  os << "rows: first argument; columns: remaining arguments in lex order\n";
  const std::size_t columns = table.size() / static_cast<std::size_t>(group.carrier_size());
  for (int x = 0; x < group.carrier_size(); ++x) {
    os << x << " |";
    for (std::size_t c = 0; c < columns; ++c) {
      os << ' ' << table[static_cast<std::size_t>(x) * columns + c];
    }
    os << "\n";
  }
  emit(g, os.str(),
       njson{{"command", "group-cayley"},
             {"group", njson::parse(group_to_json(group))},
             {"table", table}});
  return kPass;
}

// ---- group-check -----------------------------------------------------------

int run_group_check(const GlobalOpts& g, const GroupInput& in) {
  const FiniteNaryGroup group = load_group(in);
  const GroupValidationReport report = validate_group(group, g.budget);
  const auto identities = find_identities(group, g.budget);
  const auto zeros = find_zeros(group, g.budget);
  const auto cert = derivedness_certificate(group, g.budget);

  std::ostringstream os;
  os << "N=" << group.carrier_size() << " arity=" << group.arity()
     << " law=" << law_str(group) << "\n";
  os << "total associativity: " << (report.associativity ? "FAIL" : "ok") << "\n";
  if (report.associativity) {
    const auto& w = *report.associativity;
    os << "  word " << tuple_str(w.word) << ": placement " << w.placement_a << " -> "
       << w.value_a << ", placement " << w.placement_b << " -> " << w.value_b << "\n";
  }
  os << "commutativity: " << (report.commutativity ? "FAIL" : "ok") << "\n";
  if (report.commutativity) {
    const auto& w = *report.commutativity;
    os << "  " << tuple_str(w.args) << " -> " << w.value << " but sorted "
       << tuple_str(w.sorted_args) << " -> " << w.sorted_value << "\n";
  }
  os << "querelements: " << (report.querelement ? "FAIL" : "ok");
  njson quer_value;
  if (report.querelement) {
    const auto& w = *report.querelement;
    os << "\n  element " << w.element << " has " << w.solutions.size() << " solutions "
       << tuple_str(w.solutions) << "\n";
    quer_value = nullptr;
  } else {
    njson quer_map = njson::array();
    os << " (";
    for (int a = 0; a < group.carrier_size(); ++a) {
      const int q = querelement(group, a);
      if (a) os << ", ";
      os << a << "->" << q;
      quer_map.push_back(q);
    }
    os << ")\n";
    quer_value = std::move(quer_map);
  }

  auto set_str = [](const std::set<int>& s) {
    if (s.empty()) return std::string("none");
    std::ostringstream ss;
    for (int v : s) ss << (ss.tellp() > 0 ? " " : "") << v;
    return ss.str();
  };
  os << "identities: " << set_str(identities) << "\n";
  os << "zeros: " << set_str(zeros) << "\n";
  os << "derivedness: gcd(N, arity-1)=" << cert.gcd_value << ", identity "
     << (cert.has_identity ? "present" : "absent") << " -> "
     << (cert.necessarily_nonderived ? "necessarily nonderived"
                                     : "no nonderivedness certificate")
     << "\n";
  os << "result: " << (report.ok() ? "valid polyadic group" : "NOT a polyadic group")
     << "\n";

  njson doc{{"command", "group-check"},
            {"group", njson::parse(group_to_json(group))},
            {"valid", report.ok()},
            {"associativity",
             report.associativity ? njson{{"ok", false},
                                          {"witness", witness_json(*report.associativity)}}
                                  : njson{{"ok", true}}},
            {"commutativity",
             report.commutativity ? njson{{"ok", false},
                                          {"witness", witness_json(*report.commutativity)}}
                                  : njson{{"ok", true}}},
            {"querelements",
             report.querelement ? njson{{"ok", false},
                                        {"witness", witness_json(*report.querelement)}}
                                : njson{{"ok", true}, {"map", quer_value}}},
            {"identities", identities},
            {"zeros", zeros},
            {"derivedness", njson{{"has_identity", cert.has_identity},
                                  {"gcd", cert.gcd_value},
                                  {"necessarily_nonderived", cert.necessarily_nonderived}}}};
  emit(g, os.str(), doc);
  return report.ok() ? kPass : kViolations;
}

// ---- grade-check / grade-strong ---------------------------------------------

std::string algebra_header(const GradedAlgebra& a) {
  std::ostringstream os;
  os << "dim=" << a.dim() << " mul_arity=" << a.mul_arity()
     << " add_arity=" << a.add_arity() << " |G|=" << a.group().carrier_size()
     << " grading law=" << law_str(a.group()) << "\n";
  return os.str();
}

int run_grade_check(const GlobalOpts& g, const std::string& input, bool strong) {
  const GradedAlgebra alg = algebra_from_json(read_input(input));
  std::ostringstream os;
  os << algebra_header(alg);

  njson doc{{"command", strong ? "grade-strong" : "grade-check"},
            {"dim", alg.dim()},
            {"mul_arity", alg.mul_arity()},
            {"add_arity", alg.add_arity()}};

  const GradedCheckReport inclusion = check_graded(alg, g.budget);
  if (inclusion.arity_mismatch) {
    os << "arity mismatch: grading group arity " << inclusion.group_arity
       << " != multiplication arity " << inclusion.mul_arity << "\n";
    doc["arity_mismatch"] = true;
    doc["group_arity"] = inclusion.group_arity;
    emit(g, os.str(), doc);
    return kViolations;
  }
  doc["arity_mismatch"] = false;

  njson violations = njson::array();
  for (const auto& v : inclusion.violations) violations.push_back(violation_json(v));
  doc["graded"] = inclusion.ok();
  doc["violations"] = std::move(violations);
  os << "graded: " << (inclusion.ok() ? "yes" : "NO") << "\n";
  print_violations(os, inclusion.violations);

  bool all_ok = inclusion.ok();
  if (strong) {
    const StrongGradedReport report = check_strongly_graded(alg, g.budget);
    const auto supp = support(alg);
    njson deficiencies = njson::array();
    for (const auto& d : report.deficiencies) deficiencies.push_back(deficiency_json(d));
    doc["strongly_graded"] = report.ok();
    doc["deficiencies"] = std::move(deficiencies);
    njson supp_json = njson::array();
    for (int s : supp) supp_json.push_back(s);
    doc["support"] = std::move(supp_json);
    doc["group_order"] = alg.group().carrier_size();

    os << "strongly graded: " << (report.ok() ? "yes" : "NO") << "\n";
    print_deficiencies(os, report.deficiencies);
    os << "support: " << supp.size() << " of " << alg.group().carrier_size()
       << " grades\n";

    const SupportAssertionReport assertion = check_support_assertion(alg, g.budget);
    os << "support assertion (strong -> full support): "
       << (assertion.holds() ? "holds" : "VIOLATED") << "\n";
    doc["support_assertion"] = assertion.holds();

    const auto ell_m = check_order_theorem(alg);
    if (ell_m) {
      os << "order theorem: |G|=" << alg.group().carrier_size() << " = " << *ell_m << "*("
         << alg.add_arity() << "-1)+1 -> ell_m=" << *ell_m << "\n";
      doc["order_ell_m"] = *ell_m;
    } else {
      os << "order theorem: |G|=" << alg.group().carrier_size()
         << " is not a quantized length for addition arity " << alg.add_arity() << "\n";
      doc["order_ell_m"] = nullptr;
    }
    const bool order_ok = !report.ok() || ell_m.has_value();
    all_ok = all_ok && report.ok() && assertion.holds() && order_ok;
  }
  emit(g, os.str(), doc);
  return all_ok ? kPass : kViolations;
}

// ---- grade-higher ------------------------------------------------------------

struct GradeHigherOpts {
  std::string input;
  long ell = 1;
  std::string grading_path;
  bool force_left = false;
  bool strong = false;
};

int run_grade_higher(const GlobalOpts& g, const GradeHigherOpts& opts) {
  const GradedAlgebra alg = algebra_from_json(read_input(opts.input));
  const FiniteNaryGroup grading_op =
      opts.grading_path.empty()
          ? compose_power(alg.group(), opts.ell, g.budget)
          : group_from_json(read_input(opts.grading_path));
  const HigherPowerNesting nesting = opts.force_left
                                         ? HigherPowerNesting::force_left
                                         : HigherPowerNesting::require_associative;

  std::ostringstream os;
  os << algebra_header(alg);
  njson doc{{"command", "grade-higher"},
            {"ell", opts.ell},
            {"grading_arity", grading_op.arity()},
            {"grading_law", law_str(grading_op)},
            {"self_composed", opts.grading_path.empty()}};

  bool all_ok;
  if (opts.strong) {
    const HigherPowerStrongReport report =
        check_higher_power_strongly_graded(alg, opts.ell, grading_op, nesting, g.budget);
    os << "word length: " << report.inclusion.word_length << " (power " << opts.ell
       << ")\n";
    os << "higher-power graded: " << (report.inclusion.ok() ? "yes" : "NO") << "\n";
    print_violations(os, report.inclusion.violations);
    os << "higher-power strongly graded: " << (report.ok() ? "yes" : "NO") << "\n";
    print_deficiencies(os, report.deficiencies);
    njson violations = njson::array();
    for (const auto& v : report.inclusion.violations)
      violations.push_back(violation_json(v));
    njson deficiencies = njson::array();
    for (const auto& d : report.deficiencies) deficiencies.push_back(deficiency_json(d));
    doc["word_length"] = report.inclusion.word_length;
    doc["graded"] = report.inclusion.ok();
    doc["violations"] = std::move(violations);
    doc["strongly_graded"] = report.ok();
    doc["deficiencies"] = std::move(deficiencies);
    all_ok = report.ok();
  } else {
    const HigherPowerReport report =
        check_higher_power_graded(alg, opts.ell, grading_op, nesting, g.budget);
    os << "word length: " << report.word_length << " (power " << opts.ell << ")\n";
    os << "higher-power graded: " << (report.ok() ? "yes" : "NO") << "\n";
    print_violations(os, report.violations);
    njson violations = njson::array();
    for (const auto& v : report.violations) violations.push_back(violation_json(v));
    doc["word_length"] = report.word_length;
    doc["graded"] = report.ok();
    doc["violations"] = std::move(violations);
    all_ok = report.ok();
  }
  emit(g, os.str(), doc);
  return all_ok ? kPass : kViolations;
}

// ---- blockshift-verify ---------------------------------------------------------

struct BlockshiftOpts {
  int arity = 0;
  std::vector<long> exponents;
  std::vector<std::string> probes;
  std::string poly_path;
};

int run_blockshift_verify(const GlobalOpts& g, const BlockshiftOpts& opts) {
  const int n = opts.arity;
  if (n < 2) throw std::invalid_argument("--arity must be at least 2");
  std::vector<Rat> probes;
  if (opts.probes.empty()) {
    probes = default_probe_values();
  } else {
    for (const auto& s : opts.probes) probes.push_back(rat_parse(s));
  }
  for (const Rat& x : probes) {
    if (x == 0) throw std::invalid_argument("probe values must be nonzero");
  }
  std::vector<long> exponents = opts.exponents;
  if (exponents.empty()) exponents = {1, monomial_degree(1, n), monomial_degree(2, n)};

  std::ostringstream os;
  os << "arity " << n << ", probes:";
  for (const Rat& x : probes) os << ' ' << rat_str(x);
  os << "\n";

  bool ok = true;
  const PolyadicIdentityReport identity = polyadic_identity_check(n, probes);
  ok = ok && identity.ok(n);
  os << "identity law ((n-1) copies of E absorb): "
     << (identity.identity_law_holds ? "ok" : "FAIL") << "\n";
  os << "E " << (identity.e_equals_ordinary_identity ? "equals" : "differs from")
     << " the ordinary identity (expected to "
     << (n == 2 ? "equal" : "differ") << ")\n";

  njson exponent_rows = njson::array();
  for (long d : exponents) {
    const BlockShiftMonomial mono{n, Rat(2), d};
    const bool adm = mono.admissible();
    bool quer_ok = true;
    std::string quer_text;
    if (d >= 0) {
      const BlockShiftMonomial quer = querelement_monomial(mono);
      std::vector<BlockShiftMonomial> word(static_cast<std::size_t>(n - 1), mono);
      word.push_back(quer);
      const BlockShiftMonomial back = nary_monomial_product(word);
      quer_ok = back == mono;
      for (const Rat& x : probes) {
        quer_ok = quer_ok && matrix_realization(back, x) == matrix_realization(mono, x);
      }
      quer_text = "querelement exponent " + std::to_string(quer.exponent) + " coeff " +
                  rat_str(quer.coeff);
    }
    ok = ok && quer_ok;
    os << "exponent " << d << ": " << (adm ? "admissible" : "not admissible");
    if (!quer_text.empty()) {
      os << "; " << quer_text << " -> quer law " << (quer_ok ? "ok" : "FAIL");
    }
    os << "\n";
    exponent_rows.push_back(njson{{"exponent", d}, {"admissible", adm},
                                  {"quer_law_ok", quer_ok}});
  }

  // n-fold product of the first monomials (cycled) against the matrix oracle.
  std::vector<BlockShiftMonomial> word;
  for (int i = 0; i < n; ++i) {
    word.push_back(BlockShiftMonomial{
        n, Rat(i + 2), exponents[static_cast<std::size_t>(i) % exponents.size()]});
  }
  const BlockShiftMonomial product = nary_monomial_product(word);
  bool product_ok = true;
  for (const Rat& x : probes) {
    RatMatrix acc = matrix_realization(word[0], x);
    for (int i = 1; i < n; ++i) acc = acc * matrix_realization(word[static_cast<std::size_t>(i)], x);
    product_ok = product_ok && acc == matrix_realization(product, x);
  }
  ok = ok && product_ok;
  os << "product law (coeffs multiply, exponents add): "
     << (product_ok ? "ok" : "FAIL") << " -> coeff " << rat_str(product.coeff)
     << " exponent " << product.exponent << "\n";

  njson doc{{"command", "blockshift-verify"},
            {"arity", n},
            {"identity_law_ok", identity.identity_law_holds},
            {"e_equals_identity", identity.e_equals_ordinary_identity},
            {"exponents", std::move(exponent_rows)},
            {"product_law_ok", product_ok},
            {"product", njson{{"coeff", rat_str(product.coeff)},
                              {"exponent", product.exponent}}}};

  if (!opts.poly_path.empty()) {
    const MatrixPolynomial poly = polynomial_from_json(read_input(opts.poly_path));
    if (poly.arity != n) {
      throw std::invalid_argument("polynomial arity " + std::to_string(poly.arity) +
                                  " does not match --arity " + std::to_string(n));
    }
    const std::vector<MatrixPolynomial> copies(static_cast<std::size_t>(n), poly);
    const PolynomialProductResult self = polynomial_nary_product(copies);
    bool poly_ok = true;
    for (const Rat& x : probes) {
      RatMatrix acc = polynomial_realization(poly, x);
      for (int i = 1; i < n; ++i) acc = acc * polynomial_realization(poly, x);
      poly_ok = poly_ok && acc == polynomial_realization(self.product, x);
    }
    ok = ok && poly_ok;
    os << "polynomial self-product vs matrix oracle: " << (poly_ok ? "ok" : "FAIL")
       << "; " << self.product.terms.size() << " terms";
    if (!self.non_admissible_exponents.empty()) {
      os << "; non-admissible exponents:";
      for (long d : self.non_admissible_exponents) os << ' ' << d;
    }
    os << "\n";
    doc["poly_self_product_ok"] = poly_ok;
    doc["poly_non_admissible_exponents"] = self.non_admissible_exponents;
  }

  emit(g, os.str(), doc);
  return ok ? kPass : kViolations;
}

// ---- zring-check -----------------------------------------------------------------

struct ZringOpts {
  long a = 0;
  long b = 0;
  std::optional<int> m_add;
  std::optional<int> n_mul;
  int cap = 64;
};

int run_zring_check(const GlobalOpts& g, const ZringOpts& opts) {
  std::ostringstream os;
  njson doc{{"command", "zring-check"}, {"a", opts.a}, {"b", opts.b}};

  if (opts.m_add.has_value() != opts.n_mul.has_value()) {
    throw std::invalid_argument("give both --m and --n, or neither");
  }

  int m = 0, n = 0;
  if (opts.m_add) {
    m = *opts.m_add;
    n = *opts.n_mul;
  } else {
    const MinimalArities minimal = minimal_arities(opts.a, opts.b, opts.cap);
    doc["cap"] = minimal.cap;
    if (!minimal.m_add || !minimal.n_mul) {
      os << "no closing arities up to cap " << minimal.cap << " (m: "
         << (minimal.m_add ? std::to_string(*minimal.m_add) : "none") << ", n: "
         << (minimal.n_mul ? std::to_string(*minimal.n_mul) : "none") << ")\n";
      doc["minimal_m_add"] = nullptr;
      doc["minimal_n_mul"] = nullptr;
      emit(g, os.str(), doc);
      return kViolations;
    }
    m = *minimal.m_add;
    n = *minimal.n_mul;
    os << "minimal arities: m_add=" << m << " n_mul=" << n << "\n";
    doc["minimal_m_add"] = m;
    doc["minimal_n_mul"] = n;
  }

  const ShapeInvariants inv = shape_invariants(opts.a, opts.b, m, n);
  os << "class " << opts.a << " mod " << opts.b << " with (" << m << "," << n
     << ")-ary operations: I=" << rat_str(inv.I) << " J=" << rat_str(inv.J) << "\n";
  doc["m_add"] = m;
  doc["n_mul"] = n;
  doc["I"] = rat_str(inv.I);
  doc["J"] = rat_str(inv.J);
  doc["admissible"] = inv.admissible();

  if (!inv.admissible()) {
    os << "not closed: I and J must be nonnegative integers\n";
    emit(g, os.str(), doc);
    return kViolations;
  }

  const PolyadicIntegerRing ring = PolyadicIntegerRing::make(opts.a, opts.b, m, n);
  const Int y = ring.representative(1);
  const Int quer = ring.additive_querelement(y);
  os << "closed: valid polyadic ring\n";
  os << "additive querelement of " << y.get_str() << ": " << quer.get_str() << "\n";
  doc["querelement_example"] =
      njson{{"y", y.get_str()}, {"quer", quer.get_str()}};
  emit(g, os.str(), doc);
  return kPass;
}

// ---- poly-grade -------------------------------------------------------------------

struct PolyGradeOpts {
  std::string input;
  int n_mul = 2;
  std::size_t limit = 10;
};

int run_poly_grade(const GlobalOpts& g, const PolyGradeOpts& opts) {
  const MatrixPolynomial poly = polynomial_from_json(read_input(opts.input));
  const PolyadicIntegerRing ring = grading_ring_for_polynomials(poly.arity, opts.n_mul);
  const PolynomialGradingReport report = check_polynomial_grading(poly, ring, g.budget);

  std::ostringstream os;
  os << "polynomial arity " << poly.arity << ", " << poly.terms.size()
     << " block-shift terms; grading ring " << ring.residue().get_str() << " mod "
     << ring.modulus().get_str() << "\n";
  os << "note: " << report.power_rule_note << "\n";
  os << report.entries.size() << " exponent tuples checked, "
     << (report.ok() ? "all consistent" : "INCONSISTENCIES FOUND") << "\n";
  std::size_t shown = 0;
  for (const auto& e : report.entries) {
    if (shown >= opts.limit && e.ok) continue;
    if (shown < opts.limit) {
      os << "exponents (";
      for (std::size_t i = 0; i < e.exponents.size(); ++i) {
        if (i) os << ',';
        os << e.exponents[i];
      }
      os << ") -> component exponent " << e.lhs_exponent << ", ring sum "
         << e.rhs_sum.get_str() << ", power " << e.power << ": "
         << (e.ok ? "ok" : "MISMATCH") << "\n";
      ++shown;
    }
  }
  if (report.entries.size() > shown) {
    os << "... (" << report.entries.size() - shown << " more)\n";
  }

  njson entries = njson::array();
  for (const auto& e : report.entries) {
    entries.push_back(njson{{"exponents", e.exponents},
                            {"lhs_exponent", e.lhs_exponent},
                            {"rhs_sum", e.rhs_sum.get_str()},
                            {"power", e.power},
                            {"ok", e.ok}});
  }
  njson doc{{"command", "poly-grade"},
            {"arity", poly.arity},
            {"ring", njson::parse(ring_to_json(ring))},
            {"power_rule_note", report.power_rule_note},
            {"ok", report.ok()},
            {"entries", std::move(entries)}};
  emit(g, os.str(), doc);
  return report.ok() ? kPass : kViolations;
}

// ---- hom-check -----------------------------------------------------------------------

struct HomCheckOpts {
  std::string hom;
  std::string source;
  std::string target;
};

int run_hom_check(const GlobalOpts& g, const HomCheckOpts& opts) {
  const GradedHomomorphism hom = hom_from_json(read_input(opts.hom));
  const GradedAlgebra source = algebra_from_json(read_input(opts.source));
  const GradedAlgebra target = algebra_from_json(read_input(opts.target));
  const GradedHomReport report = check_graded_homomorphism(hom, source, target, g.budget);

  std::ostringstream os;
  os << "source " << algebra_header(source);
  os << "target " << algebra_header(target);
  os << "additive (on " << report.additive.samples.size()
     << " samples): " << (report.additive.ok() ? "ok" : "FAIL") << "\n";
  os << "multiplicative: " << (report.multiplicative.ok() ? "ok" : "FAIL") << "\n";
  for (const auto& v : report.multiplicative.violations) {
    os << "  at " << tuple_str(v.args) << ": phi(product) = " << vec_str(v.lhs)
       << ", product of images = " << vec_str(v.rhs) << "\n";
  }
  os << "group homomorphism: " << (report.group_hom.ok() ? "ok" : "FAIL") << "\n";
  if (report.group_hom.arity_mismatch) os << "  (arity mismatch)\n";
  for (const auto& v : report.group_hom.violations) {
    os << "  at " << tuple_str(v.args) << ": psi(law) = " << v.lhs
       << ", law(psi) = " << v.rhs << "\n";
  }
  os << "grading preservation: " << (report.grading.ok() ? "ok" : "FAIL") << "\n";
  for (const auto& v : report.grading.violations) {
    os << "  basis " << source.basis()[static_cast<std::size_t>(v.basis_index)]
       << " (degree " << v.source_degree << "): image " << vec_str(v.image)
       << " is not inside component " << v.target_degree << "\n";
  }
  os << "graded homomorphism: " << (report.ok() ? "yes" : "NO") << "\n";

  njson mult = njson::array();
  for (const auto& v : report.multiplicative.violations) {
    mult.push_back(njson{{"args", v.args},
                         {"lhs", rat_list_json(v.lhs)},
                         {"rhs", rat_list_json(v.rhs)}});
  }
  njson ghom = njson::array();
  for (const auto& v : report.group_hom.violations) {
    ghom.push_back(njson{{"args", v.args}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  njson grading = njson::array();
  for (const auto& v : report.grading.violations) {
    grading.push_back(njson{{"basis_index", v.basis_index},
                            {"source_degree", v.source_degree},
                            {"target_degree", v.target_degree},
                            {"image", rat_list_json(v.image)}});
  }
  njson doc{{"command", "hom-check"},
            {"additive_ok", report.additive.ok()},
            {"additive_samples", report.additive.samples.size()},
            {"multiplicative_ok", report.multiplicative.ok()},
            {"multiplicative_violations", std::move(mult)},
            {"group_hom_ok", report.group_hom.ok()},
            {"group_hom_violations", std::move(ghom)},
            {"grading_ok", report.grading.ok()},
            {"grading_violations", std::move(grading)},
            {"ok", report.ok()}};
  emit(g, os.str(), doc);
  return report.ok() ? kPass : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and enumeration workbench for graded polyadic algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts global;
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  std::uint64_t budget_limit = EvalBudget{}.limit;
  if (const char* env = std::getenv("POLYGRADE_BUDGET")) {
    budget_limit = std::strtoull(env, nullptr, 10);
  }
  app.add_option("--budget", budget_limit,
                 "max law applications per exhaustive check");

  QuantizeOpts quantize;
  auto* quantize_cmd =
      app.add_subcommand("quantize", "word-length arithmetic for n-ary operations");
  quantize_cmd->add_option("--n", quantize.n, "operation arity");
  auto* ell_opt = quantize_cmd->add_option("--ell", quantize.ell, "polyadic power");
  auto* w_opt = quantize_cmd->add_option("--w", quantize.w, "word length");
  ell_opt->excludes(w_opt);
  quantize_cmd->add_flag("--pairs", quantize.pairs,
                         "solve the coupled power equation instead");
  quantize_cmd->add_option("--max", quantize.max, "bound for --pairs (default 5)");

  GroupInput cayley_in;
  auto* cayley_cmd = app.add_subcommand("group-cayley", "print the full value table");
  add_group_input(cayley_cmd, cayley_in);

  GroupInput check_in;
  auto* check_cmd = app.add_subcommand(
      "group-check", "validate the polyadic group axioms and search for "
                     "identities, zeros, and querelements");
  add_group_input(check_cmd, check_in);

  std::string grade_input;
  auto* grade_cmd =
      app.add_subcommand("grade-check", "check that products stay in the component "
                                        "named by the grading group");
  grade_cmd->add_option("--input", grade_input, "algebra JSON file ('-' for stdin)")
      ->required();

  std::string strong_input;
  auto* strong_cmd = app.add_subcommand(
      "grade-strong", "grade-check plus exact spanning, support, and order checks");
  strong_cmd->add_option("--input", strong_input, "algebra JSON file ('-' for stdin)")
      ->required();

  GradeHigherOpts higher;
  auto* higher_cmd = app.add_subcommand(
      "grade-higher", "grade ell-fold word products against a wider grading operation");
  higher_cmd->add_option("--input", higher.input, "algebra JSON file ('-' for stdin)")
      ->required();
  higher_cmd->add_option("--ell", higher.ell, "word power (default 1)");
  higher_cmd->add_option("--grading", higher.grading_path,
                         "grading group JSON (default: the algebra's own group "
                         "composed ell times)");
  higher_cmd->add_flag("--force-left", higher.force_left,
                       "evaluate words left-nested even without associativity");
  higher_cmd->add_flag("--strong", higher.strong, "also check spanning");

  BlockshiftOpts blockshift;
  auto* blockshift_cmd = app.add_subcommand(
      "blockshift-verify", "check block-shift monomial laws against the matrix oracle");
  blockshift_cmd->add_option("--arity", blockshift.arity, "multiplication arity")
      ->required();
  blockshift_cmd->add_option("--exponents", blockshift.exponents,
                             "monomial exponents to probe");
  blockshift_cmd->add_option("--probes", blockshift.probes,
                             "nonzero rational sample points (default 1 2 3/2)");
  blockshift_cmd->add_option("--poly", blockshift.poly_path,
                             "polynomial JSON to self-multiply against the oracle");

  ZringOpts zring;
  auto* zring_cmd = app.add_subcommand(
      "zring-check", "closure invariants and arities of a congruence class");
  zring_cmd->add_option("--a", zring.a, "residue")->required();
  zring_cmd->add_option("--b", zring.b, "modulus")->required();
  zring_cmd->add_option("--m", zring.m_add, "addition arity");
  zring_cmd->add_option("--n", zring.n_mul, "multiplication arity");
  zring_cmd->add_option("--cap", zring.cap, "search bound for minimal arities");

  PolyGradeOpts poly_grade;
  auto* poly_cmd = app.add_subcommand(
      "poly-grade", "grade block-shift polynomial products by the matching "
                    "polyadic integer ring");
  poly_cmd->add_option("--input", poly_grade.input, "polynomial JSON ('-' for stdin)")
      ->required();
  poly_cmd->add_option("--n-mul", poly_grade.n_mul,
                       "multiplication arity of the grading ring (default 2)");
  poly_cmd->add_option("--limit", poly_grade.limit,
                       "max tuples listed in text output (default 10)");

  HomCheckOpts hom_check;
  auto* hom_cmd = app.add_subcommand(
      "hom-check", "test a (phi, psi) pair for the graded homomorphism properties");
  hom_cmd->add_option("--hom", hom_check.hom, "homomorphism JSON")->required();
  hom_cmd->add_option("--source", hom_check.source, "source algebra JSON")->required();
  hom_cmd->add_option("--target", hom_check.target, "target algebra JSON")->required();

  auto* suite_cmd = app.add_subcommand(
      "paper-suite", "run every bundled worked example end-to-end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  global.format = (format == "json") ? Format::json : Format::text;
  global.budget.limit = budget_limit;

  try {
    if (app.got_subcommand(quantize_cmd)) return run_quantize(global, quantize);
    if (app.got_subcommand(cayley_cmd)) return run_group_cayley(global, cayley_in);
    if (app.got_subcommand(check_cmd)) return run_group_check(global, check_in);
    if (app.got_subcommand(grade_cmd)) return run_grade_check(global, grade_input, false);
    if (app.got_subcommand(strong_cmd)) return run_grade_check(global, strong_input, true);
    if (app.got_subcommand(higher_cmd)) return run_grade_higher(global, higher);
    if (app.got_subcommand(blockshift_cmd))
      return run_blockshift_verify(global, blockshift);
    if (app.got_subcommand(zring_cmd)) return run_zring_check(global, zring);
    if (app.got_subcommand(poly_cmd)) return run_poly_grade(global, poly_grade);
    if (app.got_subcommand(hom_cmd)) return run_hom_check(global, hom_check);
    if (app.got_subcommand(suite_cmd)) {
      return run_example_suite(global.format == Format::json, global.budget);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const JsonError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
