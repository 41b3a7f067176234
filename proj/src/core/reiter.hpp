// Reiter functions, partition defects and the merging verifier for groups
// whose equality is only enumerable.

#ifndef AMENLAB_CORE_REITER_HPP_
#define AMENLAB_CORE_REITER_HPP_

#include <functional>
#include <map>

#include "common.hpp"
#include "folner.hpp"
#include "group.hpp"

namespace amenlab {

// Finitely supported f: codes -> positive rationals.
class ReiterFunction {
 public:
  ReiterFunction() = default;
  // Throws kEmptySupport for an empty map, kMalformedInput for values <= 0.
  explicit ReiterFunction(std::map<Code, Rational> values);

  static ReiterFunction indicator(const CodeSet& F);

  const std::map<Code, Rational>& values() const noexcept { return values_; }
  CodeSet support() const;
  Rational at(Code c) const;
  Rational mass() const;

 private:
  std::map<Code, Rational> values_;
};

// Disjoint non-empty blocks. Codes not covered by any block behave as
// singletons wherever a partition is applied.
class SupportPartition {
 public:
  SupportPartition() = default;
  // Throws kMalformedInput for empty or overlapping blocks.
  explicit SupportPartition(std::vector<CodeSet> blocks);

  static SupportPartition singletons(const CodeSet& s);

  const std::vector<CodeSet>& blocks() const noexcept { return blocks_; }
  bool covers(const CodeSet& s) const;
  // Every block of *this lies inside a block of `coarser`.
  bool refines(const SupportPartition& coarser) const;

 private:
  std::vector<CodeSet> blocks_;
};

// ν_{G*}f: f summed over each element, keyed by the least code.
std::map<Code, Rational> pushforward(const Group& g, const ReiterFunction& f);

// ‖h - ₓh‖₁ / ‖h‖₁ for h = ν_{G*}f and each x in D.
DefectList reiter_defect(const Group& g, const ReiterFunction& f,
                         const CodeSet& D);

using StarFn = std::function<Code(Code, Code)>;

// Σ_V |Σ_{v∈V} f(v) - Σ_{u: x⋆u∈V} f(u)| / Σf over the blocks V of the
// partition restricted to supp f ∪ x⋆supp f.
Rational partition_defect(const ReiterFunction& f, const SupportPartition& p,
                          Code x, const StarFn& star);

enum class KappaVerdict { kInvariant, kNotInvariant, kUnknown };

struct KappaResult {
  KappaVerdict verdict = KappaVerdict::kUnknown;
  std::uint64_t steps = 0;
  std::uint64_t merges = 0;
  DefectList last_defects;  // partition defects at the final partition
};

KappaResult kappa_verify(const Group& g, std::uint64_t n, const CodeSet& D,
                         const ReiterFunction& f, Budget budget);

// A level set {v : h(v) > ε} of h = ν_{G*}f with every |F∖xF|/|F| below
// |D|/(2n). Throws kPreconditionFailed if some reiter defect is not below
// 1/n, kNoLevelSet if no level set qualifies.
CodeSet extract_folner_from_reiter(const Group& g, const ReiterFunction& h,
                                   const CodeSet& D, std::uint64_t n);

}  // namespace amenlab

#endif  // AMENLAB_CORE_REITER_HPP_
