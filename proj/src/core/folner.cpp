#include "folner.hpp"

#include <unordered_set>

namespace amenlab {

namespace {

void require_computable(const Group& g) {
  if (g.mode() != Mode::kComputable) {
    throw Error(ErrorCode::kWrongMode, "operation needs a computable group");
  }
}

void require_nonempty(const CodeSet& F) {
  if (F.empty()) throw Error(ErrorCode::kEmptySet, "F is empty");
}

bool within(std::uint64_t d, std::uint64_t size, std::uint64_t n,
            FolnerForm form) {
  unsigned __int128 lhs = static_cast<unsigned __int128>(d) * n;
  return form == FolnerForm::kStrict ? lhs < size : lhs <= size;
}

// Tests F against every x in D, charging |F| mults per x. Returns nullopt when
// the meter runs out before the answer is known.
std::optional<bool> passes(const Group& g, const CodeSet& F, const CodeSet& D,
                           std::uint64_t n, FolnerForm form, StepMeter& meter) {
  for (Code x : D) {
    if (!meter.charge(F.size())) return std::nullopt;
    if (!within(defect_count(g, F, x), F.size(), n, form)) return false;
  }
  return true;
}

FolnerCertificate certify(const Group& g, const CodeSet& F, const CodeSet& D,
                          std::uint64_t n) {
  FolnerCertificate c;
  c.spec = g.spec();
  c.D = D;
  c.n = n;
  c.F = F;
  for (Code x : D) c.defects.emplace_back(x, defect(g, F, x));
  return c;
}

}  // namespace

std::uint64_t defect_count(const Group& g, const CodeSet& F, Code x) {
  std::uint64_t d = 0;
  for (Code f : F) {
    if (!contains(F, g.mult(x, f))) ++d;
  }
  return d;
}

Rational defect(const Group& g, const CodeSet& F, Code x) {
  require_nonempty(F);
  return Rational(defect_count(g, F, x), F.size());
}

FolnerCheck is_n_folner(const Group& g, const CodeSet& F, const CodeSet& D,
                        std::uint64_t n) {
  require_computable(g);
  require_nonempty(F);
  FolnerCheck out;
  out.ok = true;
  for (Code x : D) {
    std::uint64_t d = defect_count(g, F, x);
    out.defects.emplace_back(x, Rational(d, F.size()));
    if (!within(d, F.size(), n, FolnerForm::kNonStrict)) out.ok = false;
  }
  return out;
}

bool is_n_folner_complement(const Group& g, const CodeSet& F, const CodeSet& D,
                            std::uint64_t n) {
  require_computable(g);
  require_nonempty(F);
  // |F∩xF|/|F| > 1 - 1/n  <=>  n|F∩xF| > (n-1)|F|
  for (Code x : D) {
    std::uint64_t inter = F.size() - defect_count(g, F, x);
    unsigned __int128 lhs = static_cast<unsigned __int128>(inter) * n;
    unsigned __int128 rhs = static_cast<unsigned __int128>(n - 1) * F.size();
    if (!(lhs > rhs)) return false;
  }
  return true;
}

FolnerSearch search_folner(const Group& g, const CodeSet& D, std::uint64_t n,
                           Budget budget, FolnerForm form) {
  require_computable(g);
  if (n == 0) throw Error(ErrorCode::kMalformedInput, "n must be >= 1");
  StepMeter meter(budget);
  FolnerSearch out;
  const Family& fam = g.family();

  constexpr std::size_t kBallCap = 1 << 14;
  std::size_t previous = 0;
  for (unsigned r = 0;; ++r) {
    CodeSet B = ball(g, D, r, &meter);
    if (meter.exhausted()) {
      out.steps = meter.used();
      return out;
    }
    auto ok = passes(g, B, D, n, form, meter);
    if (!ok) {
      out.steps = meter.used();
      return out;
    }
    if (*ok) {
      out.certificate = certify(g, B, D, n);
      out.steps = meter.used();
      return out;
    }
    if (B.size() == previous || B.size() > kBallCap) break;
    previous = B.size();
  }

  auto order = fam.order();
  for (std::uint64_t mask = 1; mask != 0; ++mask) {
    if (order && *order < 64 && (mask >> *order) != 0) break;
    CodeSet F;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      F.push_back(code(static_cast<std::uint64_t>(__builtin_ctzll(m))));
    }
    auto ok = passes(g, F, D, n, form, meter);
    if (!ok) break;
    if (*ok) {
      out.certificate = certify(g, F, D, n);
      break;
    }
  }
  out.steps = meter.used();
  return out;
}

FolnerFunctionResult folner_function(const Group& g, const CodeSet& D,
                                     std::uint64_t n, Budget budget) {
  require_computable(g);
  if (n == 0) throw Error(ErrorCode::kMalformedInput, "n must be >= 1");
  StepMeter meter(budget);
  FolnerFunctionResult out;
  std::size_t nontrivial = 0;
  for (Code x : D) nontrivial += (x != g.identity());
  out.scope = nontrivial <= 1 ? "exact" : "connected";

  for (std::uint64_t s = 1;; ++s) {
    CodeSet B = ball(g, D, static_cast<unsigned>(s - 1), &meter);
    if (meter.exhausted()) break;
    CodeSet others;
    for (Code c : B) {
      if (c != g.identity()) others.push_back(c);
    }
    if (others.size() + 1 < s) {
      // The ball stopped growing below size s: the group (or the component
      // of the identity) is exhausted and no larger connected set exists.
      break;
    }
    // All (s-1)-subsets of `others`, lexicographic by index.
    std::vector<std::size_t> idx(s - 1);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (;;) {
      CodeSet F{g.identity()};
      for (std::size_t i : idx) F.push_back(others[i]);
      F = make_set(std::move(F));
      auto ok = passes(g, F, D, n, FolnerForm::kNonStrict, meter);
      if (!ok) {
        out.steps = meter.used();
        return out;
      }
      if (*ok) {
        out.min_size = s;
        out.witness = F;
        out.steps = meter.used();
        return out;
      }
      // Next combination.
      std::size_t i = idx.size();
      while (i > 0 && idx[i - 1] == others.size() - idx.size() + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  out.steps = meter.used();
  return out;
}

FolnerSearch folner_sequence(const Group& g, std::uint64_t j, Budget budget) {
  if (j == 0) throw Error(ErrorCode::kMalformedInput, "j must be >= 1");
  CodeSet D;
  for (std::uint64_t c = 0; c < j; ++c) {
    if (g.family().valid(code(c))) D.push_back(code(c));
  }
  return search_folner(g, D, j, budget);
}

}  // namespace amenlab
