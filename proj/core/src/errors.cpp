#include "polygrade/errors.hpp"

#include <limits>

namespace polygrade {

BudgetExceeded::BudgetExceeded(const std::string& op, std::uint64_t needed,
                               std::uint64_t limit)
    : std::runtime_error(op + ": needs " + std::to_string(needed) +
                         " law applications, budget is " + std::to_string(limit)),
      needed_(needed),
      limit_(limit) {}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, bool* overflow) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  *overflow = false;
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kMax / base) {
      *overflow = true;
      return kMax;
    }
    out *= base;
  }
  return out;
}

void charge_budget(const EvalBudget& budget, std::uint64_t needed, bool overflowed,
                   const std::string& op) {
  if (overflowed || needed > budget.limit) {
    throw BudgetExceeded(op, overflowed ? std::numeric_limits<std::uint64_t>::max() : needed,
                         budget.limit);
  }
}

}  // namespace polygrade
