// Effective paradoxical decompositions of a non-amenable group from a witness
// (K0, n): the key K, the graph Γ_K(G) and its perfect (1,2)-matching.
//
// Γ_K(G) lives on one code space: left copy of g is 2g, right copy of h is
// 2h + 1, and left g is joined to right kg for every k in K.

#ifndef AMENLAB_CORE_PARADOX_HPP_
#define AMENLAB_CORE_PARADOX_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "group.hpp"
#include "harem.hpp"

namespace amenlab {

// Least n1 with (n+1)^n1 >= 3 n^n1.
std::uint64_t minimal_n1(std::uint64_t n);

// {ab : a in A, b in B}
CodeSet set_product(const Group& g, const CodeSet& A, const CodeSet& B);

struct ExpandedKey {
  CodeSet K;
  std::uint64_t n1 = 0;
  // Guaranteed lower bound on |KF|/|F| for every finite F.
  Rational expansion = 3;
};

ExpandedKey expand_key(const Group& g, const CodeSet& K0, std::uint64_t n);

class CayleyBipartite final : public BipartiteGraph {
 public:
  CayleyBipartite(Group g, CodeSet K);

  static Code left(Code g);
  static Code right(Code h);
  static Code untag(Code v) noexcept { return code(value(v) >> 1); }

  bool is_left(Code v) const override { return value(v) % 2 == 0; }
  CodeSet neighbors(Code v) const override;
  std::size_t degree(Code v) const override;
  std::optional<Code> left_vertex(std::uint64_t i) const override;
  std::optional<Code> right_vertex(std::uint64_t i) const override;

  const CodeSet& key() const noexcept { return K_; }

 private:
  Group g_;
  CodeSet K_;
  CodeSet K_inv_;
};

// The two partners of m, ψ1(m) < ψ2(m), and θ_i(m) = ψ_i(m) m^{-1}.
struct Resolution {
  Code m{};
  Code psi1{}, psi2{};
  Code theta1{}, theta2{};
};

// Read access to a decomposition, shared by the matching pipeline and by
// hand-built test fixtures so both go through the same verifier.
class DecompositionView {
 public:
  virtual ~DecompositionView() = default;
  virtual const Group& group() const = 0;
  virtual const CodeSet& key() const = 0;
  // The two (unordered) elements of φ^{-1}(m); nullopt when out of budget.
  virtual std::optional<std::pair<Code, Code>> partners(Code m, Budget b) = 0;
  // φ(h); nullopt when out of budget.
  virtual std::optional<Code> phi(Code h, Budget b) = 0;
  // Consistency problems internal to the representation.
  virtual std::vector<std::string> internal_violations() const { return {}; }

  std::optional<Resolution> resolve(Code m, Budget b);
};

class Decomposition final : public DecompositionView {
 public:
  Decomposition(Group g, ExpandedKey key, HaremOptions options = {});

  const Group& group() const override { return g_; }
  const CodeSet& key() const override { return key_.K; }
  const ExpandedKey& expanded_key() const noexcept { return key_; }
  std::optional<std::pair<Code, Code>> partners(Code m, Budget b) override;
  std::optional<Code> phi(Code h, Budget b) override;
  std::vector<std::string> internal_violations() const override;

  const HaremState& matching() const noexcept { return state_; }

 private:
  Group g_;
  ExpandedKey key_;
  std::shared_ptr<CayleyBipartite> graph_;
  HaremState state_;
};

// expand_key, then Γ_K(G), then the (1,2)-matching with h(n) = 2n.
std::unique_ptr<Decomposition> build_decomposition(const Group& g,
                                                   const CodeSet& K0,
                                                   std::uint64_t n,
                                                   HaremOptions options = {});

enum class Side { kA, kB };
enum class Membership { kIn, kOut, kUnknown };

// m ∈ A_k (side A) or m ∈ B_k (side B). Throws kKeyNotInK.
Membership decomp_membership(DecompositionView& d, Code k, Code m, Side side,
                             Budget b);

struct VerifyReport {
  std::vector<Resolution> resolved;
  std::vector<Code> unresolved;
  std::vector<std::string> violations;
};

// Resolves m = 0..count-1 and right codes 0..count-1 and checks the
// decomposition laws on them.
VerifyReport verify_decomposition_prefix(DecompositionView& d,
                                         std::uint64_t count, Budget b);

// The first-letter decomposition of free:2 with K = {1, a^-1, b^-1}.
class ClassicalFreeDecomposition final : public DecompositionView {
 public:
  ClassicalFreeDecomposition();

  const Group& group() const override { return g_; }
  const CodeSet& key() const override { return K_; }
  std::optional<std::pair<Code, Code>> partners(Code m, Budget b) override;
  std::optional<Code> phi(Code h, Budget b) override;

 private:
  Group g_;
  CodeSet K_;
};

}  // namespace amenlab

#endif  // AMENLAB_CORE_PARADOX_HPP_
