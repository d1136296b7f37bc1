#include "polygrade/blockshift.hpp"

#include "polygrade/arity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polygrade {
namespace {

void require_arity(int arity, const char* op) {
  if (arity < 2) {
    throw std::invalid_argument(std::string(op) + ": arity must be at least 2, got " +
                                std::to_string(arity));
  }
}

// X(y) for the given arity: the cyclic shift with y in every shifted slot.
RatMatrix shift_matrix(int arity, const Rat& y) {
  const std::size_t size = static_cast<std::size_t>(arity - 1);
  RatMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, (i + 1) % size) = y;
  return m;
}

}  // namespace

bool BlockShiftMonomial::admissible() const {
  return exponent == 0 ||
         (exponent >= 1 && (exponent - 1) % (arity - 1) == 0);
}

long monomial_degree(long ell, int arity) { return word_length(ell, arity); }

BlockShiftMonomial nary_monomial_product(std::span<const BlockShiftMonomial> args) {
  if (args.empty()) {
    throw std::invalid_argument("nary_monomial_product: no factors");
  }
  const int arity = args.front().arity;
  require_arity(arity, "nary_monomial_product");
  if (static_cast<int>(args.size()) != arity) {
    throw std::invalid_argument("nary_monomial_product: expected " +
                                std::to_string(arity) + " factors, got " +
                                std::to_string(args.size()));
  }
  BlockShiftMonomial out{arity, Rat(1), 0};
  for (const auto& m : args) {
    if (m.arity != arity) {
      throw std::invalid_argument("nary_monomial_product: mixed arities " +
                                  std::to_string(arity) + " and " +
                                  std::to_string(m.arity));
    }
    out.coeff *= m.coeff;
    out.exponent += m.exponent;
  }
  return out;
}

RatMatrix matrix_realization(const BlockShiftMonomial& mono, const Rat& x_value) {
  require_arity(mono.arity, "matrix_realization");
  RatMatrix m = shift_matrix(mono.arity, rat_pow(x_value, mono.exponent));
  m *= mono.coeff;
  return m;
}

BlockShiftMonomial querelement_monomial(const BlockShiftMonomial& mono) {
  require_arity(mono.arity, "querelement_monomial");
  if (mono.coeff == 0) {
    throw std::domain_error("querelement_monomial: zero monomial has no querelement");
  }
  const long inv_power = 2 - mono.arity;
  return BlockShiftMonomial{mono.arity, rat_pow(mono.coeff, inv_power),
                            mono.exponent * inv_power};
}

PolyadicIdentityReport polyadic_identity_check(int arity, std::span<const Rat> x_values) {
  require_arity(arity, "polyadic_identity_check");
  PolyadicIdentityReport report;
  const RatMatrix e = shift_matrix(arity, Rat(1));
  report.e_equals_ordinary_identity =
      e == RatMatrix::identity(static_cast<std::size_t>(arity - 1));
  report.identity_law_holds = true;
  for (const Rat& x : x_values) {
    const RatMatrix target = shift_matrix(arity, x);
    RatMatrix acc = e;
    for (int i = 0; i < arity - 2; ++i) acc = acc * e;
    acc = acc * target;
    if (!(acc == target)) {
      report.identity_law_holds = false;
      break;
    }
  }
  return report;
}

const std::vector<Rat>& default_probe_values() {
  static const std::vector<Rat> values = {Rat(1), Rat(2), Rat(3) / 2};
  return values;
}

MatrixPolynomial MatrixPolynomial::make(int arity, Rat constant,
                                        std::map<long, Rat> terms) {
  require_arity(arity, "MatrixPolynomial");
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first < 1) {
      throw std::invalid_argument("MatrixPolynomial: term exponent " +
                                  std::to_string(it->first) + " must be >= 1");
    }
    it = (it->second == 0) ? terms.erase(it) : std::next(it);
  }
  return MatrixPolynomial{arity, std::move(constant), std::move(terms)};
}

RatMatrix polynomial_realization(const MatrixPolynomial& p, const Rat& x_value) {
  require_arity(p.arity, "polynomial_realization");
  RatMatrix acc = matrix_realization({p.arity, p.constant, 0}, x_value);
  for (const auto& [exponent, coeff] : p.terms) {
    acc = acc + matrix_realization({p.arity, coeff, exponent}, x_value);
  }
  return acc;
}

PolynomialProductResult polynomial_nary_product(std::span<const MatrixPolynomial> args) {
  if (args.empty()) {
    throw std::invalid_argument("polynomial_nary_product: no factors");
  }
  const int arity = args.front().arity;
  require_arity(arity, "polynomial_nary_product");
  if (static_cast<int>(args.size()) != arity) {
    throw std::invalid_argument("polynomial_nary_product: expected " +
                                std::to_string(arity) + " factors, got " +
                                std::to_string(args.size()));
  }

  // Per-factor term lists, with the E part as exponent 0.
  std::vector<std::vector<std::pair<long, Rat>>> factors;
  factors.reserve(args.size());
  for (const auto& p : args) {
    if (p.arity != arity) {
      throw std::invalid_argument("polynomial_nary_product: mixed arities " +
                                  std::to_string(arity) + " and " +
                                  std::to_string(p.arity));
    }
    std::vector<std::pair<long, Rat>> list;
    if (p.constant != 0) list.emplace_back(0, p.constant);
    for (const auto& [exponent, coeff] : p.terms) list.emplace_back(exponent, coeff);
    factors.push_back(std::move(list));
  }

  std::map<long, Rat> collected;
  const bool any_empty =
      std::any_of(factors.begin(), factors.end(), [](const auto& f) { return f.empty(); });
  if (!any_empty) {
    std::vector<std::size_t> choice(factors.size(), 0);
    bool more = true;
    while (more) {
      long exponent = 0;
      Rat coeff = 1;
      for (std::size_t k = 0; k < choice.size(); ++k) {
        exponent += factors[k][choice[k]].first;
        coeff *= factors[k][choice[k]].second;
      }
      collected[exponent] += coeff;
      more = false;
      for (std::size_t pos = choice.size(); pos-- > 0;) {
        if (++choice[pos] < factors[pos].size()) {
          more = true;
          break;
        }
        choice[pos] = 0;
      }
    }
  }

  Rat constant = 0;
  if (auto it = collected.find(0); it != collected.end()) {
    constant = it->second;
    collected.erase(it);
  }
  PolynomialProductResult result;
  result.product = MatrixPolynomial::make(arity, std::move(constant), std::move(collected));
  for (const auto& [exponent, coeff] : result.product.terms) {
    if (!BlockShiftMonomial{arity, coeff, exponent}.admissible()) {
      result.non_admissible_exponents.push_back(exponent);
    }
  }
  return result;
}

ComponentProductDegree component_product_degree(std::span<const long> ells, int arity) {
  require_arity(arity, "component_product_degree");
  if (static_cast<int>(ells.size()) != arity) {
    throw std::invalid_argument("component_product_degree: expected " +
                                std::to_string(arity) + " powers, got " +
                                std::to_string(ells.size()));
  }
  long sum = 0;
  for (long ell : ells) {
    if (ell < 0) {
      throw std::invalid_argument("component_product_degree: negative power");
    }
    sum += ell;
  }
  const long power = sum + 1;
  return ComponentProductDegree{word_length(power, arity), power};
}

}  // namespace polygrade
