#include "witness.hpp"

#include <map>
#include <numeric>

namespace amenlab {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kWitness: return "WITNESS";
    case Verdict::kNotWitness: return "NOT_WITNESS";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

WitnessVerdict decide_witness_commutation(const Group& g, const CodeSet& K) {
  WitnessVerdict out;
  switch (g.family().kind()) {
    case FamilyKind::kFree:
      for (std::size_t i = 0; i < K.size(); ++i) {
        for (std::size_t j = i + 1; j < K.size(); ++j) {
          if (g.mult(K[i], K[j]) != g.mult(K[j], K[i])) {
            out.verdict = Verdict::kWitness;
            out.pair = std::pair{K[i], K[j]};
            out.rationale = "non-commuting pair generates a free subgroup";
            return out;
          }
        }
      }
      out.verdict = Verdict::kNotWitness;
      out.rationale = "all pairs commute; <K> is cyclic";
      return out;
    case FamilyKind::kFreeAbelian:
      out.verdict = Verdict::kNotWitness;
      out.rationale = "abelian group; every pair commutes";
      return out;
    case FamilyKind::kCyclic:
    case FamilyKind::kLamplighter:
      out.verdict = Verdict::kNotWitness;
      out.rationale = "amenable family";
      return out;
    default:
      throw Error(ErrorCode::kUnsupportedFamily,
                  "no witness decider for " + g.spec());
  }
}

RefuteResult refute_witness_bounded(const Group& g, const CodeSet& K,
                                    std::uint64_t n, std::uint64_t size_bound,
                                    Budget budget, unsigned ball_radius) {
  if (g.mode() != Mode::kComputable) {
    throw Error(ErrorCode::kWrongMode, "refutation needs a computable group");
  }
  if (n == 0) throw Error(ErrorCode::kMalformedInput, "n must be >= 1");
  StepMeter meter(budget);
  RefuteResult out;

  auto test = [&](const CodeSet& F) -> std::optional<bool> {
    ++out.subsets;
    for (Code x : K) {
      if (!meter.charge(F.size())) return std::nullopt;
      unsigned __int128 d = defect_count(g, F, x);
      if (d * n > F.size()) return false;
    }
    return true;
  };
  auto found = [&](const CodeSet& F) {
    out.status = RefuteStatus::kFound;
    out.certificate = FolnerCertificate{g.spec(), K, n, F, {}};
    for (Code x : K) out.certificate->defects.emplace_back(x, defect(g, F, x));
    out.steps = meter.used();
    return out;
  };

  CodeSet B;
  for (unsigned r = 0; r <= ball_radius; ++r) {
    B = ball(g, K, r, &meter);
    if (meter.exhausted()) {
      out.steps = meter.used();
      return out;
    }
    if (B.size() > size_bound) break;
    auto ok = test(B);
    if (!ok) {
      out.steps = meter.used();
      return out;
    }
    if (*ok) return found(B);
  }
  B = ball(g, K, ball_radius, &meter);

  const std::size_t limit = std::min<std::uint64_t>(size_bound, B.size());
  for (std::size_t s = 1; s <= limit; ++s) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      CodeSet F;
      for (std::size_t i : idx) F.push_back(B[i]);
      auto ok = test(F);
      if (!ok) {
        out.steps = meter.used();
        return out;
      }
      if (*ok) return found(F);
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == B.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  out.status = RefuteStatus::kNoneFound;
  out.steps = meter.used();
  return out;
}

// ---------------------------------------------------------------------------
// Subgroup membership
// ---------------------------------------------------------------------------

namespace {

// Stallings graph of ⟨K⟩ in free:k. Edge (u, i, v) reads a_i from u to v.
class StallingsOracle final : public SubgroupOracle {
 public:
  StallingsOracle(const Group& g, CodeSet K)
      : SubgroupOracle(std::move(K)),
        owner_(g.family_ptr()),
        free_(static_cast<const FreeGroup&>(*owner_)) {
    parent_.push_back(0);
    for (Code w : generators()) add_loop(free_.decode(w));
    fold();
  }

  bool contains(Code x) const override {
    std::size_t v = 0;
    for (unsigned l : free_.decode(x)) {
      auto it = next_.find({v, l});
      if (it == next_.end()) return false;
      v = it->second;
    }
    return v == 0;
  }

  SubgroupMethod method() const noexcept override {
    return SubgroupMethod::kStallings;
  }

 private:
  std::size_t fresh() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  void add_loop(const std::vector<unsigned>& word) {
    if (word.empty()) return;
    std::size_t u = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      std::size_t v = i + 1 == word.size() ? 0 : fresh();
      add_edge(u, word[i], v);
      u = v;
    }
  }

  void add_edge(std::size_t u, unsigned letter, std::size_t v) {
    if (letter % 2 == 0) {
      edges_.push_back({u, letter / 2, v});
    } else {
      edges_.push_back({v, letter / 2, u});
    }
  }

  // Identifies vertices until every vertex has at most one edge per label
  // and direction, then records the transition table over all 2k letters.
  void fold() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::pair<std::size_t, unsigned>, std::size_t> out, in;
      for (auto& e : edges_) {
        std::size_t u = find(e.from), v = find(e.to);
        auto [o, fresh_out] = out.try_emplace({u, e.label}, v);
        if (!fresh_out && find(o->second) != v) {
          unite(o->second, v);
          changed = true;
          break;
        }
        auto [i, fresh_in] = in.try_emplace({v, e.label}, u);
        if (!fresh_in && find(i->second) != u) {
          unite(i->second, u);
          changed = true;
          break;
        }
      }
    }
    for (auto& e : edges_) {
      std::size_t u = find(e.from), v = find(e.to);
      next_[{u, 2 * e.label}] = v;
      next_[{v, 2 * e.label + 1}] = u;
    }
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // the base vertex 0 always stays a root
  }

  struct Edge {
    std::size_t from;
    unsigned label;
    std::size_t to;
  };

  std::shared_ptr<const Family> owner_;
  const FreeGroup& free_;
  std::vector<std::size_t> parent_;
  std::vector<Edge> edges_;
  std::map<std::pair<std::size_t, unsigned>, std::size_t> next_;
};

// Row echelon basis of the lattice spanned by K in Z^d.
class LatticeOracle final : public SubgroupOracle {
 public:
  LatticeOracle(const Group& g, CodeSet K)
      : SubgroupOracle(std::move(K)),
        owner_(g.family_ptr()),
        zd_(static_cast<const FreeAbelianGroup&>(*owner_)) {
    std::vector<std::vector<BigInt>> rows;
    for (Code c : generators()) {
      std::vector<BigInt> row;
      for (std::int64_t z : zd_.decode(c)) row.emplace_back(z);
      rows.push_back(std::move(row));
    }
    const unsigned d = zd_.dim();
    std::size_t top = 0;
    for (unsigned col = 0; col < d && top < rows.size(); ++col) {
      // Euclid on the column until a single non-zero entry remains.
      for (;;) {
        std::size_t best = rows.size();
        for (std::size_t r = top; r < rows.size(); ++r) {
          if (rows[r][col] != 0 &&
              (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) {
            best = r;
          }
        }
        if (best == rows.size()) break;
        std::swap(rows[top], rows[best]);
        for (std::size_t r = top + 1; r < rows.size(); ++r) {
          if (rows[r][col] == 0) continue;
          BigInt q = rows[r][col] / rows[top][col];
          for (unsigned c = 0; c < d; ++c) rows[r][c] -= q * rows[top][c];
        }
        bool others = false;
        for (std::size_t r = top + 1; r < rows.size(); ++r) others |= rows[r][col] != 0;
        if (!others) {
          pivots_.push_back(col);
          basis_.push_back(rows[top]);
          ++top;
          break;
        }
      }
    }
  }

  bool contains(Code x) const override {
    std::vector<BigInt> v;
    for (std::int64_t z : zd_.decode(x)) v.emplace_back(z);
    std::size_t b = 0;
    for (unsigned col = 0; col < v.size(); ++col) {
      if (b < basis_.size() && pivots_[b] == col) {
        const auto& row = basis_[b];
        if (v[col] % row[col] != 0) return false;
        BigInt q = v[col] / row[col];
        for (unsigned c = 0; c < v.size(); ++c) v[c] -= q * row[c];
        ++b;
      } else if (v[col] != 0) {
        return false;
      }
    }
    return true;
  }

  SubgroupMethod method() const noexcept override {
    return SubgroupMethod::kLattice;
  }

 private:
  std::shared_ptr<const Family> owner_;
  const FreeAbelianGroup& zd_;
  std::vector<std::vector<BigInt>> basis_;
  std::vector<unsigned> pivots_;
};

}  // namespace

std::unique_ptr<SubgroupOracle> subgroup_membership(const Group& g,
                                                    const CodeSet& K) {
  switch (g.family().kind()) {
    case FamilyKind::kFree: return std::make_unique<StallingsOracle>(g, K);
    case FamilyKind::kFreeAbelian: return std::make_unique<LatticeOracle>(g, K);
    default:
      throw Error(ErrorCode::kUnsupportedFamily,
                  "no subgroup membership oracle for " + g.spec());
  }
}

CodeSet restrict_folner_to_subgroup(const Group& g, const CodeSet& K,
                                    std::uint64_t n, const CodeSet& F_m) {
  if (F_m.empty()) throw Error(ErrorCode::kEmptySet, "F_m is empty");
  auto H = subgroup_membership(g, K);
  std::vector<bool> assigned(F_m.size(), false);
  for (std::size_t i = 0; i < F_m.size(); ++i) {
    if (assigned[i]) continue;
    const Code t_inv = g.inv(F_m[i]);
    std::vector<Code> slice;
    for (std::size_t j = 0; j < F_m.size(); ++j) {
      Code c = g.mult(F_m[j], t_inv);
      if (H->contains(c)) {
        assigned[j] = true;
        slice.push_back(c);
      }
    }
    CodeSet S = make_set(std::move(slice));
    if (is_n_folner(g, S, K, n).ok) return S;
  }
  throw Error(ErrorCode::kPreconditionFailed,
              "no coset slice of F_m is n-Følner; F_m is not m-Følner");
}

}  // namespace amenlab
