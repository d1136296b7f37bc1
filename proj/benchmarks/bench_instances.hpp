#pragma once

#include "polygrade/graded_algebra.hpp"
#include "polygrade/nary_group.hpp"

#include <map>
#include <string>
#include <vector>

namespace polygrade::bench {

// A generous budget so benchmark parameterizations are never cut short.
inline EvalBudget wide_budget() { return EvalBudget{1'000'000'000}; }

// Strongly graded ternary instance of dimension `carrier`: basis e_0..e_{N-1}
// with e_i e_j e_k = e_{(i+j+k+1) mod N}, graded over the affine shift-1
// ternary law by deg e_i = i.
inline GradedAlgebra sum_instance(int carrier) {
  std::vector<std::string> basis;
  std::vector<int> degrees;
  for (int i = 0; i < carrier; ++i) {
    basis.push_back("e" + std::to_string(i));
    degrees.push_back(i);
  }
  std::map<std::vector<int>, Vector> structure;
  for (int i = 0; i < carrier; ++i) {
    for (int j = 0; j < carrier; ++j) {
      for (int k = 0; k < carrier; ++k) {
        Vector out(static_cast<std::size_t>(carrier), Rat(0));
        out[static_cast<std::size_t>((i + j + k + 1) % carrier)] = 1;
        structure.emplace(std::vector<int>{i, j, k}, std::move(out));
      }
    }
  }
  return GradedAlgebra(std::move(basis), 3, 2, std::move(structure),
                       FiniteNaryGroup::unchecked(carrier, 3, AffineLaw{1}),
                       std::move(degrees));
}

}  // namespace polygrade::bench
