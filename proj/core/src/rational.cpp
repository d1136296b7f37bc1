#include "polygrade/rational.hpp"

#include <stdexcept>

namespace polygrade {

Rat rat_parse(const std::string& text) {
  Rat q;
  try {
    q = Rat(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  const bool negative = exp < 0;
  // Two's-complement-safe magnitude, valid for exp == LONG_MIN as well.
  const unsigned long magnitude =
      negative ? static_cast<unsigned long>(-(exp + 1)) + 1UL
               : static_cast<unsigned long>(exp);
  if (negative && base == 0) {
    throw std::domain_error("rat_pow: negative power of zero");
  }
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), magnitude);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), magnitude);
  if (negative) {
    Rat inv;
    mpq_inv(inv.get_mpq_t(), out.get_mpq_t());
    return inv;
  }
  return out;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

bool rat_is_integral(const Rat& q) { return q.get_den() == 1; }

}  // namespace polygrade
