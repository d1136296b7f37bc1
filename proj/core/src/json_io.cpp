#include "polygrade/json_io.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <utility>

namespace polygrade {
namespace {

using njson = nlohmann::ordered_json;

njson parse_document(const std::string& text) {
  try {
    return njson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const njson& require_field(const njson& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) {
    throw JsonError(path + ": expected an object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw JsonError(path + ": missing field '" + key + "'");
  }
  return *it;
}

long require_long(const njson& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_number_unsigned()) {
    const auto u = v.get<unsigned long long>();
    if (u > static_cast<unsigned long long>(std::numeric_limits<long>::max())) {
      throw JsonError(path + ": integer out of range");
    }
    return static_cast<long>(u);
  }
  throw JsonError(path + ": expected an integer");
}

int require_int(const njson& v, const std::string& path) {
  const long value = require_long(v, path);
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    throw JsonError(path + ": integer out of range");
  }
  return static_cast<int>(value);
}

Rat require_rational(const njson& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return rat_parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw JsonError(path + ": " + e.what());
    }
  }
  if (v.is_number_integer() || v.is_number_unsigned()) {
    return Rat(require_long(v, path));
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::nearbyint(d) == d && std::abs(d) <= 9007199254740992.0) {
      return Rat(static_cast<long>(d));
    }
    throw JsonError(path + ": non-integral number; write exact rationals as \"p/q\"");
  }
  throw JsonError(path + ": expected a rational (\"p/q\" string or integer)");
}

const njson& require_array(const njson& v, const std::string& path) {
  if (!v.is_array()) throw JsonError(path + ": expected an array");
  return v;
}

Int require_bigint(const njson& v, const std::string& path) {
  if (v.is_number_integer() || v.is_number_unsigned()) {
    return Int(require_long(v, path));
  }
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw JsonError(path + ": not an integer: '" + v.get<std::string>() + "'");
    }
  }
  throw JsonError(path + ": expected an integer (number or decimal string)");
}

njson int_to_value(const Int& z) {
  if (z.fits_slong_p()) return njson(z.get_si());
  return njson(z.get_str());
}

GroupLaw parse_law(const njson& v, const std::string& path) {
  if (!v.is_object()) throw JsonError(path + ": expected an object");
  const bool has_affine = v.contains("affine");
  const bool has_table = v.contains("table");
  if (has_affine == has_table) {
    throw JsonError(path + ": law must have exactly one of 'affine' or 'table'");
  }
  if (has_affine) {
    const njson& aff = v["affine"];
    return AffineLaw{require_long(require_field(aff, "shift", path + ".affine"),
                                  path + ".affine.shift")};
  }
  const njson& table = require_array(v["table"], path + ".table");
  TableLaw law;
  law.entries.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    law.entries.push_back(
        require_int(table[i], path + ".table[" + std::to_string(i) + "]"));
  }
  return law;
}

FiniteNaryGroup group_from_value(const njson& v, const std::string& path) {
  const int carrier = require_int(require_field(v, "N", path), path + ".N");
  const int arity = require_int(require_field(v, "arity", path), path + ".arity");
  GroupLaw law = parse_law(require_field(v, "law", path), path + ".law");
  try {
    return FiniteNaryGroup::unchecked(carrier, arity, std::move(law));
  } catch (const std::invalid_argument& e) {
    throw JsonError(path + ": " + e.what());
  }
}

njson group_to_value(const FiniteNaryGroup& g) {
  njson law;
  if (g.is_affine()) {
    law["affine"] = njson{{"shift", g.affine_shift()}};
  } else {
    law["table"] = std::get<TableLaw>(g.law()).entries;
  }
  return njson{{"N", g.carrier_size()}, {"arity", g.arity()}, {"law", std::move(law)}};
}

}  // namespace

FiniteNaryGroup group_from_json(const std::string& text) {
  return group_from_value(parse_document(text), "$");
}

std::string group_to_json(const FiniteNaryGroup& g) { return group_to_value(g).dump(2); }

GradedAlgebra algebra_from_json(const std::string& text) {
  const njson doc = parse_document(text);
  const std::string path = "$";

  const njson& basis_value = require_array(require_field(doc, "basis", path), "$.basis");
  std::vector<std::string> basis;
  basis.reserve(basis_value.size());
  for (std::size_t i = 0; i < basis_value.size(); ++i) {
    if (!basis_value[i].is_string()) {
      throw JsonError("$.basis[" + std::to_string(i) + "]: expected a string");
    }
    basis.push_back(basis_value[i].get<std::string>());
  }
  const int dim = static_cast<int>(basis.size());

  const int mul_arity =
      require_int(require_field(doc, "mul_arity", path), "$.mul_arity");
  const int add_arity =
      require_int(require_field(doc, "add_arity", path), "$.add_arity");

  std::map<std::vector<int>, Vector> structure;
  const njson& entries = require_array(require_field(doc, "structure", path),
                                       "$.structure");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string entry_path = "$.structure[" + std::to_string(k) + "]";
    const njson& entry = entries[k];
    const njson& args_value = require_array(require_field(entry, "args", entry_path),
                                            entry_path + ".args");
    std::vector<int> args;
    args.reserve(args_value.size());
    for (std::size_t i = 0; i < args_value.size(); ++i) {
      args.push_back(require_int(args_value[i],
                                 entry_path + ".args[" + std::to_string(i) + "]"));
    }
    Vector out(static_cast<std::size_t>(dim), Rat(0));
    const njson& out_value = require_array(require_field(entry, "out", entry_path),
                                           entry_path + ".out");
    for (std::size_t i = 0; i < out_value.size(); ++i) {
      const std::string out_path = entry_path + ".out[" + std::to_string(i) + "]";
      const int j = require_int(require_field(out_value[i], "j", out_path),
                                out_path + ".j");
      if (j < 0 || j >= dim) {
        throw JsonError(out_path + ".j: index " + std::to_string(j) + " outside basis");
      }
      if (out[static_cast<std::size_t>(j)] != 0) {
        throw JsonError(out_path + ": duplicate coordinate j = " + std::to_string(j));
      }
      out[static_cast<std::size_t>(j)] =
          require_rational(require_field(out_value[i], "coeff", out_path),
                           out_path + ".coeff");
    }
    if (structure.contains(args)) {
      throw JsonError(entry_path + ": duplicate argument tuple");
    }
    structure.emplace(std::move(args), std::move(out));
  }

  FiniteNaryGroup group = group_from_value(require_field(doc, "group", path), "$.group");

  const njson& deg_value = require_array(require_field(doc, "deg", path), "$.deg");
  std::vector<int> degrees;
  degrees.reserve(deg_value.size());
  for (std::size_t i = 0; i < deg_value.size(); ++i) {
    degrees.push_back(require_int(deg_value[i], "$.deg[" + std::to_string(i) + "]"));
  }

  try {
    return GradedAlgebra(std::move(basis), mul_arity, add_arity, std::move(structure),
                         std::move(group), std::move(degrees));
  } catch (const ValidationError& e) {
    throw JsonError("$: " + std::string(e.what()));
  }
}

std::string algebra_to_json(const GradedAlgebra& a) {
  njson doc;
  doc["basis"] = a.basis();
  doc["mul_arity"] = a.mul_arity();
  doc["add_arity"] = a.add_arity();
  njson entries = njson::array();
  for (const auto& [args, out] : a.structure()) {
    njson out_value = njson::array();
    for (int j = 0; j < a.dim(); ++j) {
      if (out[static_cast<std::size_t>(j)] != 0) {
        out_value.push_back(
            njson{{"j", j}, {"coeff", rat_str(out[static_cast<std::size_t>(j)])}});
      }
    }
    entries.push_back(njson{{"args", args}, {"out", std::move(out_value)}});
  }
  doc["structure"] = std::move(entries);
  doc["group"] = group_to_value(a.group());
  doc["deg"] = a.degrees();
  return doc.dump(2);
}

MatrixPolynomial polynomial_from_json(const std::string& text) {
  const njson doc = parse_document(text);
  const int arity = require_int(require_field(doc, "arity", "$"), "$.arity");
  Rat constant = 0;
  if (doc.is_object() && doc.contains("constant")) {
    constant = require_rational(doc["constant"], "$.constant");
  }
  std::map<long, Rat> terms;
  if (doc.is_object() && doc.contains("terms")) {
    const njson& list = require_array(doc["terms"], "$.terms");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string term_path = "$.terms[" + std::to_string(i) + "]";
      const long exponent = require_long(
          require_field(list[i], "exponent", term_path), term_path + ".exponent");
      if (terms.contains(exponent)) {
        throw JsonError(term_path + ": duplicate exponent " + std::to_string(exponent));
      }
      terms.emplace(exponent, require_rational(require_field(list[i], "coeff", term_path),
                                               term_path + ".coeff"));
    }
  }
  try {
    return MatrixPolynomial::make(arity, std::move(constant), std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw JsonError("$: " + std::string(e.what()));
  }
}

std::string polynomial_to_json(const MatrixPolynomial& p) {
  njson doc;
  doc["arity"] = p.arity;
  doc["constant"] = rat_str(p.constant);
  njson terms = njson::array();
  for (const auto& [exponent, coeff] : p.terms) {
    terms.push_back(njson{{"exponent", exponent}, {"coeff", rat_str(coeff)}});
  }
  doc["terms"] = std::move(terms);
  return doc.dump(2);
}

PolyadicIntegerRing ring_from_json(const std::string& text) {
  const njson doc = parse_document(text);
  const Int a = require_bigint(require_field(doc, "a", "$"), "$.a");
  const Int b = require_bigint(require_field(doc, "b", "$"), "$.b");
  const int m_add = require_int(require_field(doc, "m_add", "$"), "$.m_add");
  const int n_mul = require_int(require_field(doc, "n_mul", "$"), "$.n_mul");
  try {
    return PolyadicIntegerRing::make(a, b, m_add, n_mul);
  } catch (const std::invalid_argument& e) {
    throw JsonError("$: " + std::string(e.what()));
  } catch (const ValidationError& e) {
    throw JsonError("$: " + std::string(e.what()));
  }
}

std::string ring_to_json(const PolyadicIntegerRing& r) {
  njson doc;
  doc["a"] = int_to_value(r.residue());
  doc["b"] = int_to_value(r.modulus());
  doc["m_add"] = r.add_arity();
  doc["n_mul"] = r.mul_arity();
  return doc.dump(2);
}

GradedHomomorphism hom_from_json(const std::string& text) {
  const njson doc = parse_document(text);
  GradedHomomorphism hom;
  const njson& phi = require_array(require_field(doc, "phi", "$"), "$.phi");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const std::string row_path = "$.phi[" + std::to_string(i) + "]";
    const njson& row_value = require_array(phi[i], row_path);
    Vector row;
    row.reserve(row_value.size());
    for (std::size_t j = 0; j < row_value.size(); ++j) {
      row.push_back(
          require_rational(row_value[j], row_path + "[" + std::to_string(j) + "]"));
    }
    if (!hom.phi_rows.empty() && row.size() != hom.phi_rows.front().size()) {
      throw JsonError(row_path + ": row of length " + std::to_string(row.size()) +
                      ", previous rows have length " +
                      std::to_string(hom.phi_rows.front().size()));
    }
    hom.phi_rows.push_back(std::move(row));
  }
  const njson& psi = require_array(require_field(doc, "psi", "$"), "$.psi");
  hom.psi.reserve(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    hom.psi.push_back(require_int(psi[i], "$.psi[" + std::to_string(i) + "]"));
  }
  return hom;
}

std::string hom_to_json(const GradedHomomorphism& hom) {
  njson doc;
  njson phi = njson::array();
  for (const Vector& row : hom.phi_rows) {
    njson row_value = njson::array();
    for (const Rat& q : row) row_value.push_back(rat_str(q));
    phi.push_back(std::move(row_value));
  }
  doc["phi"] = std::move(phi);
  doc["psi"] = hom.psi;
  return doc.dump(2);
}

}  // namespace polygrade
