// Witnesses of non-amenability: finite K such that for some n no n-Følner set
// w.r.t. K exists. Commutation decides this for free and free abelian groups;
// bounded Følner search refutes candidate witnesses; the subgroup oracles
// support restricting a Følner set of G to ⟨K⟩.

#ifndef AMENLAB_CORE_WITNESS_HPP_
#define AMENLAB_CORE_WITNESS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "folner.hpp"
#include "group.hpp"

namespace amenlab {

enum class Verdict { kWitness, kNotWitness, kUnknown };

const char* to_string(Verdict v) noexcept;

struct WitnessVerdict {
  Verdict verdict = Verdict::kUnknown;
  std::optional<std::pair<Code, Code>> pair;     // non-commuting evidence
  std::optional<FolnerCertificate> certificate;  // Følner evidence
  std::string rationale;
};

// free:k decides by commutation; zd:d is abelian; cyclic and lamplighter are
// answered from family knowledge. Other families: kUnsupportedFamily.
WitnessVerdict decide_witness_commutation(const Group& g, const CodeSet& K);

enum class RefuteStatus { kFound, kNoneFound, kUnknown };

struct RefuteResult {
  RefuteStatus status = RefuteStatus::kUnknown;
  std::optional<FolnerCertificate> certificate;
  std::uint64_t steps = 0;
  std::uint64_t subsets = 0;  // candidate sets tested
};

// Looks for an n-Følner set w.r.t. K of size <= size_bound: balls over K of
// radius 0..ball_radius first, then every subset of the radius-ball_radius
// ball by size, then lexicographically.
RefuteResult refute_witness_bounded(const Group& g, const CodeSet& K,
                                    std::uint64_t n, std::uint64_t size_bound,
                                    Budget budget, unsigned ball_radius = 2);

enum class SubgroupMethod { kStallings, kLattice };

class SubgroupOracle {
 public:
  virtual ~SubgroupOracle() = default;
  virtual bool contains(Code x) const = 0;
  virtual SubgroupMethod method() const noexcept = 0;
  const CodeSet& generators() const noexcept { return K_; }

 protected:
  explicit SubgroupOracle(CodeSet K) : K_(std::move(K)) {}

 private:
  CodeSet K_;
};

// Folded Stallings graph for free:k, integer echelon basis for zd:d.
// Other families: kUnsupportedFamily.
std::unique_ptr<SubgroupOracle> subgroup_membership(const Group& g,
                                                    const CodeSet& K);

// Cuts F_m into slices F_m t^{-1} ∩ ⟨K⟩, t ranging over F_m in code order,
// and returns the first slice that is n-Følner w.r.t. K. Throws
// kPreconditionFailed when none is.
CodeSet restrict_folner_to_subgroup(const Group& g, const CodeSet& K,
                                    std::uint64_t n, const CodeSet& F_m);

}  // namespace amenlab

#endif  // AMENLAB_CORE_WITNESS_HPP_
