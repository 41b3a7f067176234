#include "reiter.hpp"

#include <numeric>
#include <set>
#include <unordered_map>

namespace amenlab {

ReiterFunction::ReiterFunction(std::map<Code, Rational> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::kEmptySupport, "Reiter function has empty support");
  }
  for (const auto& [c, v] : values_) {
    if (v <= 0) {
      throw Error(ErrorCode::kMalformedInput,
                  "Reiter values must be positive (code " +
                      std::to_string(value(c)) + ")");
    }
  }
}

ReiterFunction ReiterFunction::indicator(const CodeSet& F) {
  std::map<Code, Rational> m;
  for (Code c : F) m[c] = 1;
  return ReiterFunction(std::move(m));
}

CodeSet ReiterFunction::support() const {
  CodeSet s;
  for (const auto& kv : values_) s.push_back(kv.first);
  return s;
}

Rational ReiterFunction::at(Code c) const {
  auto it = values_.find(c);
  return it == values_.end() ? Rational(0) : it->second;
}

Rational ReiterFunction::mass() const {
  Rational m = 0;
  for (const auto& kv : values_) m += kv.second;
  return m;
}

SupportPartition::SupportPartition(std::vector<CodeSet> blocks) {
  std::set<Code> seen;
  for (auto& b : blocks) {
    b = make_set(std::move(b));
    if (b.empty()) throw Error(ErrorCode::kMalformedInput, "empty block");
    for (Code c : b) {
      if (!seen.insert(c).second) {
        throw Error(ErrorCode::kMalformedInput, "overlapping blocks");
      }
    }
  }
  blocks_ = std::move(blocks);
}

SupportPartition SupportPartition::singletons(const CodeSet& s) {
  std::vector<CodeSet> blocks;
  for (Code c : s) blocks.push_back({c});
  return SupportPartition(std::move(blocks));
}

bool SupportPartition::covers(const CodeSet& s) const {
  std::set<Code> all;
  for (const auto& b : blocks_) all.insert(b.begin(), b.end());
  return std::all_of(s.begin(), s.end(),
                     [&](Code c) { return all.count(c) > 0; });
}

bool SupportPartition::refines(const SupportPartition& coarser) const {
  std::unordered_map<Code, std::size_t> owner;
  for (std::size_t i = 0; i < coarser.blocks_.size(); ++i) {
    for (Code c : coarser.blocks_[i]) owner[c] = i;
  }
  for (const auto& b : blocks_) {
    auto first = owner.find(b.front());
    for (Code c : b) {
      auto it = owner.find(c);
      // Uncovered codes are singletons of the coarser partition.
      if (it == owner.end() || first == owner.end()) {
        if (b.size() > 1) return false;
        continue;
      }
      if (it->second != first->second) return false;
    }
  }
  return true;
}

std::map<Code, Rational> pushforward(const Group& g, const ReiterFunction& f) {
  std::map<Code, Rational> h;
  for (const auto& [c, v] : f.values()) h[g.family().canonical(c)] += v;
  return h;
}

DefectList reiter_defect(const Group& g, const ReiterFunction& f,
                         const CodeSet& D) {
  if (g.mode() != Mode::kComputable) {
    throw Error(ErrorCode::kWrongMode, "reiter_defect needs a computable group");
  }
  auto h = pushforward(g, f);
  Rational mass = f.mass();
  DefectList out;
  for (Code x : D) {
    std::map<Code, Rational> diff;
    for (const auto& [c, v] : h) {
      diff[c] += v;
      diff[g.family().canonical(g.mult(x, c))] -= v;
    }
    Rational num = 0;
    for (const auto& kv : diff) num += abs(kv.second);
    out.emplace_back(x, num / mass);
  }
  return out;
}

Rational partition_defect(const ReiterFunction& f, const SupportPartition& p,
                          Code x, const StarFn& star) {
  std::unordered_map<Code, std::size_t> block_of;
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    for (Code c : p.blocks()[i]) block_of[c] = i;
  }
  // Uncovered codes get fresh singleton ids past the partition's blocks.
  std::size_t next_id = p.blocks().size();
  auto id = [&](Code c) {
    auto [it, inserted] = block_of.try_emplace(c, next_id);
    if (inserted) ++next_id;
    return it->second;
  };
  std::map<std::size_t, Rational> net;
  for (const auto& [c, v] : f.values()) {
    net[id(c)] += v;
    net[id(star(x, c))] -= v;
  }
  Rational num = 0;
  for (const auto& kv : net) num += abs(kv.second);
  return num / f.mass();
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), blocks_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --blocks_;
    return true;
  }
  std::size_t blocks() const noexcept { return blocks_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t blocks_;
};

}  // namespace

KappaResult kappa_verify(const Group& g, std::uint64_t n, const CodeSet& D,
                         const ReiterFunction& f, Budget budget) {
  if (g.mode() != Mode::kCe) {
    throw Error(ErrorCode::kWrongMode, "kappa_verify runs on a CE group");
  }
  if (n == 0) throw Error(ErrorCode::kMalformedInput, "n must be >= 1");

  // S holds supp f, the codes x⋆v and 1⋆v the star function produces for it.
  std::vector<Code> s_codes = f.support();
  for (Code v : f.support()) {
    s_codes.push_back(g.mult(g.identity(), v));
    for (Code x : D) s_codes.push_back(g.mult(x, v));
  }
  CodeSet S = make_set(std::move(s_codes));
  std::unordered_map<Code, std::size_t> index;
  for (std::size_t i = 0; i < S.size(); ++i) index[S[i]] = i;

  // Block count of the partition of S into fibres of ν.
  std::set<Code> fibres;
  for (Code c : S) fibres.insert(g.family().canonical(c));
  const std::size_t target_blocks = fibres.size();

  UnionFind uf(S.size());
  StarFn star = [&](Code a, Code b) { return g.mult(a, b); };
  KappaResult out;
  StepMeter meter(budget);

  auto test = [&]() {
    std::vector<CodeSet> blocks(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) blocks[uf.find(i)].push_back(S[i]);
    std::vector<CodeSet> nonempty;
    for (auto& b : blocks) {
      if (!b.empty()) nonempty.push_back(std::move(b));
    }
    SupportPartition p(std::move(nonempty));
    out.last_defects.clear();
    bool ok = true;
    for (Code x : D) {
      Rational m = partition_defect(f, p, x, star);
      if (m * n > 1) ok = false;
      out.last_defects.emplace_back(x, m);
    }
    return ok;
  };

  bool ok = test();
  EqCursor cursor(g);
  for (;;) {
    if (ok) {
      out.verdict = KappaVerdict::kInvariant;
      break;
    }
    if (uf.blocks() == target_blocks) {
      out.verdict = KappaVerdict::kNotInvariant;
      break;
    }
    if (!meter.charge()) break;
    auto pair = cursor.next();
    if (!pair) continue;
    auto a = index.find(pair->first);
    auto b = index.find(pair->second);
    if (a == index.end() || b == index.end()) continue;
    if (uf.unite(a->second, b->second)) {
      ++out.merges;
      ok = test();
    }
  }
  out.steps = std::min(meter.used(), meter.limit());
  return out;
}

CodeSet extract_folner_from_reiter(const Group& g, const ReiterFunction& h,
                                   const CodeSet& D, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kMalformedInput, "n must be >= 1");
  for (const auto& [x, d] : reiter_defect(g, h, D)) {
    if (d * n >= 1) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "Reiter defect for code " + std::to_string(value(x)) +
                      " is not below 1/n");
    }
  }
  auto pushed = pushforward(g, h);
  std::set<Rational> levels{Rational(0)};
  for (const auto& kv : pushed) levels.insert(kv.second);
  const Rational bound(D.size(), 2 * n);
  for (const Rational& eps : levels) {
    CodeSet F;
    for (const auto& [c, v] : pushed) {
      if (v > eps) F.push_back(c);
    }
    if (F.empty()) break;
    bool good = std::all_of(D.begin(), D.end(), [&](Code x) {
      return defect(g, F, x) < bound;
    });
    if (good) return F;
  }
  throw Error(ErrorCode::kNoLevelSet, "no level set satisfies the bound");
}

}  // namespace amenlab
