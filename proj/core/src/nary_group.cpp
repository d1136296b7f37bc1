#include "polygrade/nary_group.hpp"

#include "polygrade/tuples.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polygrade {
namespace {

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

// Cost of enumerating {0..N-1}^k, saturating on overflow.
std::uint64_t cube_cost(int carrier, int k, bool* overflow) {
  return checked_pow(static_cast<std::uint64_t>(carrier), static_cast<std::uint64_t>(k),
                     overflow);
}

// Evaluates a word of length w = ell(n'-1)+1 with one inner application of
// g at `offset` and the outer application around it.
int eval_with_placement(const FiniteNaryGroup& g, std::span<const int> word, int offset) {
  const int n = g.arity();
  std::vector<int> outer;
  outer.reserve(n);
  for (int i = 0; i < offset; ++i) outer.push_back(word[i]);
  outer.push_back(g.apply(word.subspan(offset, n)));
  for (std::size_t i = offset + n; i < word.size(); ++i) outer.push_back(word[i]);
  return g.apply(outer);
}

}  // namespace

std::string GroupValidationReport::describe() const {
  std::ostringstream os;
  if (associativity) {
    os << "associativity fails on word " << tuple_str(associativity->word)
       << ": placements " << associativity->placement_a << " and "
       << associativity->placement_b << " give " << associativity->value_a << " vs "
       << associativity->value_b << "; ";
  }
  if (commutativity) {
    os << "commutativity fails on " << tuple_str(commutativity->args) << " -> "
       << commutativity->value << " vs sorted " << tuple_str(commutativity->sorted_args)
       << " -> " << commutativity->sorted_value << "; ";
  }
  if (querelement) {
    os << "querelement of " << querelement->element << " has "
       << querelement->solutions.size() << " solutions " << tuple_str(querelement->solutions)
       << "; ";
  }
  std::string s = os.str();
  if (s.empty()) return "ok";
  s.resize(s.size() - 2);
  return s;
}

GroupValidationError::GroupValidationError(GroupValidationReport report)
    : ValidationError("group validation failed: " + report.describe()),
      report_(std::move(report)) {}

FiniteNaryGroup::FiniteNaryGroup(int carrier_size, int arity, GroupLaw law)
    : carrier_size_(carrier_size), arity_(arity), law_(std::move(law)) {}

FiniteNaryGroup FiniteNaryGroup::unchecked(int carrier_size, int arity, GroupLaw law) {
  if (carrier_size < 1) {
    throw std::invalid_argument("group: carrier size must be positive");
  }
  if (arity < 2) {
    throw std::invalid_argument("group: arity must be at least 2");
  }
  if (auto* affine = std::get_if<AffineLaw>(&law)) {
    affine->shift = ((affine->shift % carrier_size) + carrier_size) % carrier_size;
  } else {
    auto& table = std::get<TableLaw>(law);
    bool overflow = false;
    const std::uint64_t expected = cube_cost(carrier_size, arity, &overflow);
    if (overflow || table.entries.size() != expected) {
      throw std::invalid_argument("group: table has " +
                                  std::to_string(table.entries.size()) +
                                  " entries, carrier^arity requires " +
                                  (overflow ? std::string("more than 2^64")
                                            : std::to_string(expected)));
    }
    for (int v : table.entries) {
      if (v < 0 || v >= carrier_size) {
        throw std::invalid_argument("group: table value " + std::to_string(v) +
                                    " outside carrier");
      }
    }
  }
  return FiniteNaryGroup(carrier_size, arity, std::move(law));
}

FiniteNaryGroup FiniteNaryGroup::affine(int carrier_size, int arity, long shift,
                                        const EvalBudget& budget) {
  FiniteNaryGroup g = unchecked(carrier_size, arity, AffineLaw{shift});
  GroupValidationReport report = validate_group(g, budget);
  if (!report.ok()) throw GroupValidationError(std::move(report));
  return g;
}

FiniteNaryGroup FiniteNaryGroup::from_table(int carrier_size, int arity,
                                            std::vector<int> entries,
                                            const EvalBudget& budget) {
  FiniteNaryGroup g = unchecked(carrier_size, arity, TableLaw{std::move(entries)});
  GroupValidationReport report = validate_group(g, budget);
  if (!report.ok()) throw GroupValidationError(std::move(report));
  return g;
}

bool FiniteNaryGroup::is_affine() const {
  return std::holds_alternative<AffineLaw>(law_);
}

long FiniteNaryGroup::affine_shift() const {
  if (const auto* affine = std::get_if<AffineLaw>(&law_)) return affine->shift;
  throw std::logic_error("affine_shift: law is a table");
}

int FiniteNaryGroup::apply(std::span<const int> args) const {
  if (static_cast<int>(args.size()) != arity_) {
    throw std::invalid_argument("apply: expected " + std::to_string(arity_) +
                                " arguments, got " + std::to_string(args.size()));
  }
  for (int a : args) {
    if (a < 0 || a >= carrier_size_) {
      throw std::invalid_argument("apply: argument " + std::to_string(a) +
                                  " outside carrier");
    }
  }
  if (const auto* affine = std::get_if<AffineLaw>(&law_)) {
    long sum = affine->shift;
    for (int a : args) sum += a;
    return static_cast<int>(sum % carrier_size_);
  }
  const auto& table = std::get<TableLaw>(law_);
  std::size_t index = 0;
  for (int a : args) index = index * carrier_size_ + static_cast<std::size_t>(a);
  return table.entries[index];
}

std::vector<int> FiniteNaryGroup::cayley_table(const EvalBudget& budget) const {
  bool overflow = false;
  const std::uint64_t size = cube_cost(carrier_size_, arity_, &overflow);
  charge_budget(budget, size, overflow, "cayley_table");
  std::vector<int> out;
  out.reserve(size);
  std::vector<int> t(arity_, 0);
  do {
    out.push_back(apply(t));
  } while (next_tuple(t, carrier_size_));
  return out;
}

bool same_operation(const FiniteNaryGroup& a, const FiniteNaryGroup& b,
                    const EvalBudget& budget) {
  if (a.carrier_size() != b.carrier_size() || a.arity() != b.arity()) return false;
  if (a.is_affine() && b.is_affine()) return a.affine_shift() == b.affine_shift();
  return a.cayley_table(budget) == b.cayley_table(budget);
}

std::set<int> find_identities(const FiniteNaryGroup& g, const EvalBudget& budget) {
  const int n = g.carrier_size();
  charge_budget(budget, static_cast<std::uint64_t>(n) * n, false, "find_identities");
  std::set<int> out;
  std::vector<int> args(g.arity());
  for (int e = 0; e < n; ++e) {
    bool all = true;
    for (int a = 0; a < n && all; ++a) {
      std::fill(args.begin(), args.end() - 1, e);
      args.back() = a;
      all = g.apply(args) == a;
    }
    if (all) out.insert(e);
  }
  return out;
}

std::set<int> find_zeros(const FiniteNaryGroup& g, const EvalBudget& budget) {
  const int n = g.carrier_size();
  bool overflow = false;
  const std::uint64_t cost = cube_cost(n, g.arity(), &overflow);
  charge_budget(budget, cost, overflow, "find_zeros");
  std::set<int> out;
  std::vector<int> args(g.arity());
  for (int z = 0; z < n; ++z) {
    bool all = true;
    std::vector<int> rest(g.arity() - 1, 0);
    do {
      std::copy(rest.begin(), rest.end(), args.begin());
      args.back() = z;
      if (g.apply(args) != z) {
        all = false;
        break;
      }
    } while (next_tuple(rest, n));
    if (all) out.insert(z);
  }
  return out;
}

int querelement(const FiniteNaryGroup& g, int a) {
  if (a < 0 || a >= g.carrier_size()) {
    throw std::invalid_argument("querelement: element outside carrier");
  }
  std::vector<int> args(g.arity(), a);
  std::vector<int> solutions;
  for (int x = 0; x < g.carrier_size(); ++x) {
    args.back() = x;
    if (g.apply(args) == a) solutions.push_back(x);
  }
  if (solutions.size() != 1) {
    GroupValidationReport report;
    report.querelement = QuerelementWitness{a, solutions};
    throw GroupValidationError(std::move(report));
  }
  return solutions.front();
}

AssociativityResult is_totally_associative(const FiniteNaryGroup& g,
                                           const EvalBudget& budget) {
  const int n = g.arity();
  const int w = 2 * (n - 1) + 1;
  bool overflow = false;
  std::uint64_t cost = cube_cost(g.carrier_size(), w, &overflow);
  if (!overflow) {
    const std::uint64_t per_word = 2 * static_cast<std::uint64_t>(n);
    if (cost > 0 && per_word > UINT64_MAX / cost) overflow = true;
    cost *= per_word;
  }
  charge_budget(budget, cost, overflow, "is_totally_associative");

  std::vector<int> word(w, 0);
  do {
    const int base = eval_with_placement(g, word, 0);
    for (int p = 1; p < n; ++p) {
      const int other = eval_with_placement(g, word, p);
      if (other != base) {
        return {false, AssociativityWitness{word, 0, p, base, other}};
      }
    }
  } while (next_tuple(word, g.carrier_size()));
  return {true, std::nullopt};
}

CommutativityResult is_commutative(const FiniteNaryGroup& g, const EvalBudget& budget) {
  bool overflow = false;
  std::uint64_t cost = cube_cost(g.carrier_size(), g.arity(), &overflow);
  if (!overflow && cost > UINT64_MAX / 2) overflow = true;
  charge_budget(budget, overflow ? cost : cost * 2, overflow, "is_commutative");

  std::vector<int> args(g.arity(), 0);
  do {
    std::vector<int> sorted = args;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == args) continue;
    const int value = g.apply(args);
    const int sorted_value = g.apply(sorted);
    if (value != sorted_value) {
      return {false, CommutativityWitness{args, sorted, value, sorted_value}};
    }
  } while (next_tuple(args, g.carrier_size()));
  return {true, std::nullopt};
}

GroupValidationReport validate_group(const FiniteNaryGroup& g, const EvalBudget& budget) {
  GroupValidationReport report;
  if (auto assoc = is_totally_associative(g, budget); !assoc.ok) {
    report.associativity = assoc.witness;
  }
  if (auto comm = is_commutative(g, budget); !comm.ok) {
    report.commutativity = comm.witness;
  }
  std::vector<int> args(g.arity());
  for (int a = 0; a < g.carrier_size(); ++a) {
    std::fill(args.begin(), args.end(), a);
    std::vector<int> solutions;
    for (int x = 0; x < g.carrier_size(); ++x) {
      args.back() = x;
      if (g.apply(args) == a) solutions.push_back(x);
    }
    if (solutions.size() != 1) {
      report.querelement = QuerelementWitness{a, solutions};
      break;
    }
  }
  return report;
}

DerivednessCertificate derivedness_certificate(const FiniteNaryGroup& g,
                                               const EvalBudget& budget) {
  DerivednessCertificate cert;
  cert.has_identity = !find_identities(g, budget).empty();
  cert.gcd_value = std::gcd(static_cast<long>(g.carrier_size()),
                            static_cast<long>(g.arity() - 1));
  cert.necessarily_nonderived = cert.gcd_value > 1 && !cert.has_identity;
  return cert;
}

FiniteNaryGroup compose_power(const FiniteNaryGroup& g, long ell,
                              const EvalBudget& budget) {
  if (ell < 1) {
    throw std::invalid_argument("compose_power: power must be at least 1");
  }
  const int n = g.arity();
  const long w_long = ell * (n - 1) + 1;
  if (w_long > 64) {
    throw std::invalid_argument("compose_power: composed arity " +
                                std::to_string(w_long) + " is not materializable");
  }
  const int w = static_cast<int>(w_long);

  FiniteNaryGroup composed = [&] {
    if (g.is_affine()) {
      // ell nested affine applications accumulate the shift ell times.
      return FiniteNaryGroup::unchecked(g.carrier_size(), w,
                                        AffineLaw{ell * g.affine_shift()});
    }
    bool overflow = false;
    std::uint64_t cost = cube_cost(g.carrier_size(), w, &overflow);
    if (!overflow) {
      if (cost > 0 && static_cast<std::uint64_t>(ell) > UINT64_MAX / cost) overflow = true;
      cost *= static_cast<std::uint64_t>(ell);
    }
    charge_budget(budget, cost, overflow, "compose_power");

    std::vector<int> entries;
    std::vector<int> word(w, 0);
    std::vector<int> args(n);
    do {
      int acc = g.apply(std::span<const int>(word).first(n));
      std::size_t pos = n;
      while (pos < word.size()) {
        args[0] = acc;
        for (int i = 1; i < n; ++i) args[i] = word[pos + i - 1];
        acc = g.apply(args);
        pos += n - 1;
      }
      entries.push_back(acc);
    } while (next_tuple(word, g.carrier_size()));
    return FiniteNaryGroup::unchecked(g.carrier_size(), w, TableLaw{std::move(entries)});
  }();

  // Composing a valid group yields a valid group; rerun the axiom checks as
  // a self-test whenever they fit the budget.
  bool overflow = false;
  std::uint64_t self_test = cube_cost(g.carrier_size(), 2 * (w - 1) + 1, &overflow);
  if (!overflow && self_test <= budget.limit / (2 * static_cast<std::uint64_t>(w) + 1)) {
    GroupValidationReport report = validate_group(composed, budget);
    if (!report.ok()) {
      throw std::logic_error("compose_power: composition of a valid group failed "
                             "validation: " + report.describe());
    }
  }
  return composed;
}

}  // namespace polygrade
