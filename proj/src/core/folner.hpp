// Følner sets: verification, search, the Følner function and the effective
// Følner sequence.

#ifndef AMENLAB_CORE_FOLNER_HPP_
#define AMENLAB_CORE_FOLNER_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "group.hpp"

namespace amenlab {

// Non-strict: every |F∖xF|/|F| <= 1/n. Strict: every ratio < 1/n, which is
// the intersection form |F∩xF|/|F| > 1 - 1/n.
enum class FolnerForm { kNonStrict, kStrict };

using DefectList = std::vector<std::pair<Code, Rational>>;

struct FolnerCertificate {
  std::string spec;
  CodeSet D;
  std::uint64_t n = 1;
  CodeSet F;
  DefectList defects;
};

struct FolnerCheck {
  bool ok = false;
  DefectList defects;
};

// Number of f in F with x⋆f outside F, i.e. |F∖xF|.
std::uint64_t defect_count(const Group& g, const CodeSet& F, Code x);
Rational defect(const Group& g, const CodeSet& F, Code x);

FolnerCheck is_n_folner(const Group& g, const CodeSet& F, const CodeSet& D,
                        std::uint64_t n);
bool is_n_folner_complement(const Group& g, const CodeSet& F, const CodeSet& D,
                            std::uint64_t n);

struct FolnerSearch {
  std::optional<FolnerCertificate> certificate;  // nullopt: UNKNOWN
  std::uint64_t steps = 0;
};

// Balls over D ∪ D^{-1} of growing radius first, then every finite subset in
// bitmask order of its codes.
FolnerSearch search_folner(const Group& g, const CodeSet& D, std::uint64_t n,
                           Budget budget,
                           FolnerForm form = FolnerForm::kNonStrict);

struct FolnerFunctionResult {
  std::optional<std::uint64_t> min_size;  // nullopt: UNKNOWN
  CodeSet witness;
  // "exact" when D has at most one non-identity element, otherwise
  // "connected": the minimum over sets connected in the Cayley graph of D.
  std::string scope;
  std::uint64_t steps = 0;
};

FolnerFunctionResult folner_function(const Group& g, const CodeSet& D,
                                     std::uint64_t n, Budget budget);

// A j-Følner certificate for D = {0, ..., j-1}.
FolnerSearch folner_sequence(const Group& g, std::uint64_t j, Budget budget);

}  // namespace amenlab

#endif  // AMENLAB_CORE_FOLNER_HPP_
