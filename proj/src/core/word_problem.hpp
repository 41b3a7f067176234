// Deciding products in a CE group from a Følner oracle: the partial action of
// n1, n2, n3 on a 4-Følner set F is read off the enumeration of MultT.

#ifndef AMENLAB_CORE_WORD_PROBLEM_HPP_
#define AMENLAB_CORE_WORD_PROBLEM_HPP_

#include <functional>
#include <optional>

#include "common.hpp"
#include "folner.hpp"
#include "group.hpp"

namespace amenlab {

// (n, D) -> a finite F, pairwise distinct as elements, n-Følner w.r.t. D.
using FolnerOracle = std::function<CodeSet(std::uint64_t n, const CodeSet& D)>;

// Runs search_folner on `computable` in the strict form. Throws
// kPreconditionFailed when the search comes back UNKNOWN.
FolnerOracle search_oracle(const Group& computable, Budget budget);

struct WordProblemResult {
  std::optional<bool> equal;  // nullopt: UNKNOWN (budget)
  std::uint64_t k = 0;        // |F|
  std::uint64_t sigma_sizes[3] = {0, 0, 0};
  std::uint64_t witnesses = 0;  // |Σ|
  std::uint64_t steps = 0;
};

// Decides ν(n1)ν(n2) = ν(n3).
WordProblemResult decide_mult_from_folner(const Group& ce,
                                          const FolnerOracle& folner, Code n1,
                                          Code n2, Code n3, Budget budget);

}  // namespace amenlab

#endif  // AMENLAB_CORE_WORD_PROBLEM_HPP_
