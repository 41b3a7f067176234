// Numbered groups exposed only through codes.
//
// A Family fixes a concrete group together with its numbering; a Group pairs a
// family with an access mode. In COMPUTABLE mode equality of codes is
// decidable (the built-in computable families number their elements
// bijectively). In CE mode only the multiplication and inversion functions
// and the two enumerations (equal pairs, multiplication triples) may be used
// to learn about equality.
//
// Group DSL: free:<k>=1..26 | zd:<d>=1..26 | cyclic:<m>=2.. | lamplighter |
// redundant-z

#ifndef AMENLAB_CORE_GROUP_HPP_
#define AMENLAB_CORE_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "common.hpp"

namespace amenlab {

enum class Mode { kComputable, kCe };

enum class FamilyKind { kFree, kFreeAbelian, kCyclic, kLamplighter, kRedundantZ };

// One letter of a generator word.
struct Letter {
  unsigned gen;
  bool inverse;
};

class Family {
 public:
  virtual ~Family() = default;

  virtual FamilyKind kind() const noexcept = 0;
  virtual std::string spec() const = 0;

  // x⋆y: a code of ν(x)ν(y).
  virtual Code mult(Code x, Code y) const = 0;
  // x*: a code of ν(x)^{-1}.
  virtual Code inv(Code x) const = 0;

  // Least code of ν(x). Equal to x for bijective numberings.
  virtual Code canonical(Code x) const { return x; }
  virtual bool injective() const noexcept { return true; }
  // Number of valid codes for finite groups.
  virtual std::optional<std::uint64_t> order() const { return std::nullopt; }
  virtual bool abelian() const noexcept = 0;

  virtual std::vector<std::string> generator_names() const = 0;
  virtual Code generator(unsigned i) const = 0;

  // Code of a generator word. The default evaluates the product.
  virtual Code word(std::span<const Letter> letters) const;
  // Family-specific literals such as "+3" or "(1,-2)".
  virtual std::optional<Code> literal(std::string_view text) const;

  virtual std::string format(Code x) const = 0;

  bool valid(Code x) const {
    auto o = order();
    return !o || value(x) < *o;
  }
};

// Free group on a_1..a_k. Codes enumerate reduced words length-lexicographically
// with letter order a_1 < a_1^{-1} < a_2 < a_2^{-1} < ...
class FreeGroup final : public Family {
 public:
  explicit FreeGroup(unsigned rank);

  FamilyKind kind() const noexcept override { return FamilyKind::kFree; }
  std::string spec() const override;
  Code mult(Code x, Code y) const override;
  Code inv(Code x) const override;
  bool abelian() const noexcept override { return rank_ == 1; }
  std::vector<std::string> generator_names() const override;
  Code generator(unsigned i) const override;
  std::string format(Code x) const override;

  unsigned rank() const noexcept { return rank_; }

  // Letters are 2i (a_i) and 2i+1 (a_i^{-1}).
  std::vector<unsigned> decode(Code x) const;
  Code encode(std::span<const unsigned> reduced) const;
  static unsigned inverse_letter(unsigned l) noexcept { return l ^ 1U; }

 private:
  unsigned rank_;
};

// Z^d. Each coordinate is zig-zag coded, then the tuple is Cantor-paired.
class FreeAbelianGroup final : public Family {
 public:
  explicit FreeAbelianGroup(unsigned dim);

  FamilyKind kind() const noexcept override { return FamilyKind::kFreeAbelian; }
  std::string spec() const override;
  Code mult(Code x, Code y) const override;
  Code inv(Code x) const override;
  bool abelian() const noexcept override { return true; }
  std::vector<std::string> generator_names() const override;
  Code generator(unsigned i) const override;
  std::optional<Code> literal(std::string_view text) const override;
  std::string format(Code x) const override;

  unsigned dim() const noexcept { return dim_; }
  std::vector<std::int64_t> decode(Code x) const;
  Code encode(std::span<const std::int64_t> v) const;

 private:
  unsigned dim_;
};

// Z/m, coded by residues 0..m-1.
class CyclicGroup final : public Family {
 public:
  explicit CyclicGroup(std::uint64_t m);

  FamilyKind kind() const noexcept override { return FamilyKind::kCyclic; }
  std::string spec() const override;
  Code mult(Code x, Code y) const override;
  Code inv(Code x) const override;
  std::optional<std::uint64_t> order() const override { return m_; }
  bool abelian() const noexcept override { return true; }
  std::vector<std::string> generator_names() const override;
  Code generator(unsigned i) const override;
  std::optional<Code> literal(std::string_view text) const override;
  std::string format(Code x) const override;

 private:
  std::uint64_t m_;
};

// Z_2 wreath Z. An element is (lamps, cursor); the code pairs the lamp set
// (bit zigzag(i) set for each lit lamp i) with zigzag(cursor).
// (f,c)(g,d) = (f + shift_c(g), c + d). Generators: t = (0, 1), a = ({0}, 0).
class LamplighterGroup final : public Family {
 public:
  struct Element {
    std::vector<std::int64_t> lamps;  // sorted
    std::int64_t cursor = 0;
  };

  FamilyKind kind() const noexcept override { return FamilyKind::kLamplighter; }
  std::string spec() const override { return "lamplighter"; }
  Code mult(Code x, Code y) const override;
  Code inv(Code x) const override;
  bool abelian() const noexcept override { return false; }
  std::vector<std::string> generator_names() const override;
  Code generator(unsigned i) const override;
  std::string format(Code x) const override;

  Element decode(Code x) const;
  Code encode(const Element& e) const;
};

// Z = <x, y | x = y> presented by all words over x, x^{-1}, y, y^{-1}
// (reduced or not), numbered length-lexicographically with x < X < y < Y.
// The numbering is not injective; the group is exposed in CE mode.
class RedundantZ final : public Family {
 public:
  FamilyKind kind() const noexcept override { return FamilyKind::kRedundantZ; }
  std::string spec() const override { return "redundant-z"; }
  Code mult(Code x, Code y) const override;
  Code inv(Code x) const override;
  Code canonical(Code x) const override;
  bool injective() const noexcept override { return false; }
  bool abelian() const noexcept override { return true; }
  std::vector<std::string> generator_names() const override;
  Code generator(unsigned i) const override;
  Code word(std::span<const Letter> letters) const override;
  std::string format(Code x) const override;

  // Exponent sum of the spelled word.
  std::int64_t element(Code x) const;
  Code canonical_code(std::int64_t n) const;
  // Letters 0..3 = x, X, y, Y.
  std::vector<unsigned> spelling(Code x) const;
  Code spell(std::span<const unsigned> letters) const;
};

std::shared_ptr<const Family> parse_family(std::string_view spec);

class Group {
 public:
  Group(std::shared_ptr<const Family> family, Mode mode);

  Mode mode() const noexcept { return mode_; }
  const Family& family() const noexcept { return *family_; }
  std::shared_ptr<const Family> family_ptr() const noexcept { return family_; }
  std::string spec() const { return family_->spec(); }

  Code identity() const noexcept { return code(0); }
  Code mult(Code x, Code y) const { return family_->mult(x, y); }
  Code inv(Code x) const { return family_->inv(x); }

  // Decidable equality. Throws kWrongMode in CE mode.
  bool eq(Code x, Code y) const;

 private:
  std::shared_ptr<const Family> family_;
  Mode mode_;
};

// redundant-z parses into CE mode, everything else into COMPUTABLE mode.
Group make_group(std::string_view spec);
// The same family exposed in CE mode.
Group as_ce(const Group& g);

// Dovetailed enumeration of {(n1, n2) : ν(n1) = ν(n2)}. Each call to next()
// is one step; steps of the schedule that produce no pair return nullopt.
//
// Schedule: even steps walk codes c = 0, 1, ... emitting (c, c) and then
// (canonical(c), c) when they differ; odd steps (non-injective families only)
// walk all code pairs in Cantor order and emit the equal ones.
class EqCursor {
 public:
  explicit EqCursor(const Group& g);
  std::optional<std::pair<Code, Code>> next();
  std::uint64_t position() const noexcept { return position_; }

 private:
  std::optional<std::pair<Code, Code>> star_entry(std::uint64_t i);
  std::optional<std::pair<Code, Code>> full_entry(std::uint64_t i);

  std::shared_ptr<const Family> family_;
  std::uint64_t position_ = 0;
};

struct Triple {
  Code x, y, z;
  bool operator==(const Triple&) const = default;
};

// Enumeration of MultT = {(i, j, k) : ν(i)ν(j) = ν(k)}.
//
// Schedule: stream A emits (i, j, i⋆j) for (i, j) in Cantor order. For
// non-injective families stream A alternates with stream B, which walks the
// cubic shells max(i, j, k) = s and emits true triples whose k is not the
// product code i⋆j.
class MultTCursor {
 public:
  explicit MultTCursor(const Group& g);
  std::optional<Triple> next();
  std::uint64_t position() const noexcept { return position_; }

 private:
  std::optional<Triple> stream_a();
  std::optional<Triple> stream_b();

  std::shared_ptr<const Family> family_;
  std::uint64_t position_ = 0;
  std::uint64_t a_index_ = 0;
  // Shell cursor for stream B.
  std::uint64_t shell_ = 0, bi_ = 0, bj_ = 0, bk_ = 0;
};

enum class EqOutcome { kEqual, kUnknown };

struct EqDecision {
  EqOutcome outcome;
  std::uint64_t steps;
};

// Scans the equal-pairs enumeration for (x, y) or (y, x). Reflexive pairs
// are answered without consuming the enumeration.
EqDecision eq_semidecide(const Group& g, Code x, Code y, Budget budget);

// All products of at most `radius` factors from gens ∪ gens^{-1} ∪ {1}.
CodeSet ball(const Group& g, const CodeSet& gens, unsigned radius,
             StepMeter* meter = nullptr);

// Element literal: "e", "1", a generator word such as "ab^-1a^3" (uppercase
// letters abbreviate inverses), or a family literal.
Code parse_element(const Group& g, std::string_view text);
// Comma-separated literals (commas inside parentheses do not split).
std::vector<Code> parse_element_list(const Group& g, std::string_view text);

}  // namespace amenlab

#endif  // AMENLAB_CORE_GROUP_HPP_
