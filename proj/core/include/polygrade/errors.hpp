#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polygrade {

// Upper bound on elementary law applications for the exhaustive checks.
// Checks estimate their cost up front and refuse to start past the limit.
struct EvalBudget {
  std::uint64_t limit = 1'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& op, std::uint64_t needed, std::uint64_t limit);

  std::uint64_t needed() const { return needed_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t needed_;
  std::uint64_t limit_;
};

// Input data that fails structural or axiomatic validation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// base^exp in uint64; sets *overflow and saturates when the value does not fit.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, bool* overflow);

// Throws BudgetExceeded unless `needed` applications fit in the budget.
// `overflowed` marks a cost estimate that itself overflowed uint64.
void charge_budget(const EvalBudget& budget, std::uint64_t needed, bool overflowed,
                   const std::string& op);

}  // namespace polygrade
