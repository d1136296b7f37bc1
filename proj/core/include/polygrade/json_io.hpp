#pragma once

#include "polygrade/blockshift.hpp"
#include "polygrade/graded_algebra.hpp"
#include "polygrade/homs.hpp"
#include "polygrade/nary_group.hpp"
#include "polygrade/zpoly.hpp"

#include <string>

namespace polygrade {

// Malformed JSON or a schema violation; the message carries the byte
// offset for parse errors and the JSON path of the offending field
// otherwise.
class JsonError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Loading validates structure (shapes, ranges, rational syntax) but not
// group axioms; run validate_group on a loaded group when a checked one is
// required. Rational values are "p/q" strings; integral JSON numbers are
// accepted too. Ring loading validates the shape invariants, since the
// ring is not a meaningful object without them.
FiniteNaryGroup group_from_json(const std::string& text);
GradedAlgebra algebra_from_json(const std::string& text);
MatrixPolynomial polynomial_from_json(const std::string& text);
PolyadicIntegerRing ring_from_json(const std::string& text);
GradedHomomorphism hom_from_json(const std::string& text);

// Deterministic serialization: schema field order, sorted structure/term
// keys, canonical "p/q" rationals, two-space indentation.
std::string group_to_json(const FiniteNaryGroup& g);
std::string algebra_to_json(const GradedAlgebra& a);
std::string polynomial_to_json(const MatrixPolynomial& p);
std::string ring_to_json(const PolyadicIntegerRing& r);
std::string hom_to_json(const GradedHomomorphism& hom);

}  // namespace polygrade
