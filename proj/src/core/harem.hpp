// (1,k)-matchings: the finite harem solver and the back-and-forth
// construction of a perfect (1,k)-matching on an infinite bipartite graph
// given by neighbourhood oracles.

#ifndef AMENLAB_CORE_HAREM_HPP_
#define AMENLAB_CORE_HAREM_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "common.hpp"

namespace amenlab {

class BipartiteGraph {
 public:
  virtual ~BipartiteGraph() = default;
  virtual bool is_left(Code v) const = 0;
  // Sorted; every neighbour lies on the other side.
  virtual CodeSet neighbors(Code v) const = 0;
  virtual std::size_t degree(Code v) const { return neighbors(v).size(); }
  // i-th vertex of each side; nullopt past the end of a finite side.
  virtual std::optional<Code> left_vertex(std::uint64_t i) const = 0;
  virtual std::optional<Code> right_vertex(std::uint64_t i) const = 0;
};

// A finite graph listed explicitly.
class ExplicitBipartite final : public BipartiteGraph {
 public:
  ExplicitBipartite(CodeSet left, CodeSet right,
                    const std::vector<std::pair<Code, Code>>& edges);

  bool is_left(Code v) const override;
  CodeSet neighbors(Code v) const override;
  std::optional<Code> left_vertex(std::uint64_t i) const override;
  std::optional<Code> right_vertex(std::uint64_t i) const override;

 private:
  CodeSet left_, right_;
  std::map<Code, CodeSet> adj_;
};

// h: N -> N as a finite table followed by the affine tail slope*n + intercept.
class HallWitnessFn {
 public:
  HallWitnessFn() : table_{0} {}
  static HallWitnessFn affine(std::int64_t slope, std::int64_t intercept = 0);

  std::int64_t operator()(std::uint64_t n) const;
  // h'(0) = 0, h'(n) = h(n + k) for n > 0.
  HallWitnessFn shifted(std::uint64_t k) const;

  std::string describe() const;

 private:
  std::vector<std::int64_t> table_;
  std::int64_t slope_ = 0;
  std::int64_t intercept_ = 0;
};

struct FiniteBipartite {
  CodeSet A, B;
  std::vector<std::pair<Code, Code>> E;  // (a, b), sorted
  CodeSet boundary_B;
};

// Ball of radius r around v, skipping vertices in `removed`. boundary_B holds
// the B-side vertices at distance exactly r. Adds the number of neighbour
// calls made to *calls when given.
FiniteBipartite induced_ball(const BipartiteGraph& g, Code v, unsigned r,
                             const std::unordered_set<Code>* removed = nullptr,
                             std::uint64_t* calls = nullptr);

// Each a gets exactly k partners, each b outside boundary_B exactly one, each
// boundary b at most one. nullopt when infeasible.
std::optional<std::map<Code, CodeSet>> finite_harem_match(
    const FiniteBipartite& fg, unsigned k);

struct HaremOptions {
  // Caps the extraction radius (kept odd >= 3 for left steps, even >= 4 for
  // right steps). Unset: the full radius from the witness function.
  std::optional<unsigned> max_radius;
};

class HaremState {
 public:
  HaremState(std::shared_ptr<const BipartiteGraph> graph, HallWitnessFn h,
             unsigned k, HaremOptions options = {});

  // Processes the next vertex. Throws kInternalInfeasible if the finite
  // problem has no solution.
  void step();

  std::uint64_t steps() const noexcept { return step_; }
  unsigned k() const noexcept { return k_; }
  const HallWitnessFn& witness() const noexcept { return h_; }
  const BipartiteGraph& graph() const noexcept { return *graph_; }
  std::uint64_t neighbor_calls() const noexcept { return calls_; }

  bool removed(Code v) const { return removed_.count(v) > 0; }
  const std::map<Code, CodeSet>& left_matches() const noexcept { return left_; }
  const std::map<Code, Code>& right_matches() const noexcept { return right_; }

  // The radius the next step will use.
  unsigned next_radius() const;

  // "L <a> -> b1,...,bk" and "R <b> -> <a>" lines, sorted by code.
  std::string dump() const;

 private:
  std::optional<Code> next_unremoved(bool left);

  std::shared_ptr<const BipartiteGraph> graph_;
  HallWitnessFn h_;
  unsigned k_;
  HaremOptions options_;
  std::uint64_t step_ = 0;
  std::uint64_t calls_ = 0;
  std::uint64_t cursor_[2] = {0, 0};
  bool exhausted_[2] = {false, false};
  std::unordered_set<Code> removed_;
  std::map<Code, CodeSet> left_;
  std::map<Code, Code> right_;
};

// Partners of v (k for a left vertex, one for a right vertex), stepping the
// state until v is removed. nullopt once the neighbour calls made by this
// query exceed the budget.
std::optional<CodeSet> harem_query(HaremState& st, Code v, Budget budget);

struct SpotViolation {
  std::size_t sample = 0;
  std::uint64_t n = 0;
  bool left = true;
  std::uint64_t size = 0;       // |X|
  std::uint64_t neighbors = 0;  // |N(X)|
};

// For each one-sided sample X and the largest n with h(n) <= |X|, checks
// n <= |N(X)| - k|X| (left) or n <= |N(X)| - |X|/k (right).
std::vector<SpotViolation> cehhc_spot_check(const BipartiteGraph& g,
                                            const HallWitnessFn& h, unsigned k,
                                            const std::vector<CodeSet>& samples);

}  // namespace amenlab

#endif  // AMENLAB_CORE_HAREM_HPP_
