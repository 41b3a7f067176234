#include "harem.hpp"

#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace amenlab {

// ---------------------------------------------------------------------------
// ExplicitBipartite
// ---------------------------------------------------------------------------

ExplicitBipartite::ExplicitBipartite(
    CodeSet left, CodeSet right, const std::vector<std::pair<Code, Code>>& edges)
    : left_(make_set(std::move(left))), right_(make_set(std::move(right))) {
  for (Code v : left_) {
    if (contains(right_, v)) {
      throw Error(ErrorCode::kMalformedInput, "vertex on both sides");
    }
    adj_[v];
  }
  for (Code v : right_) adj_[v];
  for (auto [a, b] : edges) {
    if (!contains(left_, a) || !contains(right_, b)) {
      throw Error(ErrorCode::kMalformedInput, "edge must join left to right");
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& kv : adj_) kv.second = make_set(std::move(kv.second));
}

bool ExplicitBipartite::is_left(Code v) const { return contains(left_, v); }

CodeSet ExplicitBipartite::neighbors(Code v) const {
  auto it = adj_.find(v);
  return it == adj_.end() ? CodeSet{} : it->second;
}

std::optional<Code> ExplicitBipartite::left_vertex(std::uint64_t i) const {
  if (i >= left_.size()) return std::nullopt;
  return left_[i];
}

std::optional<Code> ExplicitBipartite::right_vertex(std::uint64_t i) const {
  if (i >= right_.size()) return std::nullopt;
  return right_[i];
}

// ---------------------------------------------------------------------------
// HallWitnessFn
// ---------------------------------------------------------------------------

HallWitnessFn HallWitnessFn::affine(std::int64_t slope, std::int64_t intercept) {
  HallWitnessFn h;
  h.slope_ = slope;
  h.intercept_ = intercept;
  return h;
}

std::int64_t HallWitnessFn::operator()(std::uint64_t n) const {
  if (n < table_.size()) return table_[n];
  return slope_ * static_cast<std::int64_t>(n) + intercept_;
}

HallWitnessFn HallWitnessFn::shifted(std::uint64_t k) const {
  HallWitnessFn h;
  h.slope_ = slope_;
  h.intercept_ = intercept_ + slope_ * static_cast<std::int64_t>(k);
  for (std::uint64_t n = 1; n + k < table_.size(); ++n) {
    h.table_.push_back(table_[n + k]);
  }
  return h;
}

std::string HallWitnessFn::describe() const {
  std::ostringstream os;
  os << "h(0)=0";
  for (std::size_t n = 1; n < table_.size(); ++n) {
    os << ", h(" << n << ")=" << table_[n];
  }
  os << ", h(n)=" << slope_ << "n";
  if (intercept_ > 0) os << "+" << intercept_;
  if (intercept_ < 0) os << intercept_;
  os << " for n>=" << table_.size();
  return os.str();
}

// ---------------------------------------------------------------------------
// Finite solver
// ---------------------------------------------------------------------------

FiniteBipartite induced_ball(const BipartiteGraph& g, Code v, unsigned r,
                             const std::unordered_set<Code>* removed,
                             std::uint64_t* calls) {
  if (r == 0) throw Error(ErrorCode::kMalformedInput, "radius must be >= 1");
  std::unordered_map<Code, unsigned> dist{{v, 0}};
  std::deque<Code> queue{v};
  FiniteBipartite fb;
  std::vector<std::pair<Code, Code>> edges;
  while (!queue.empty()) {
    Code u = queue.front();
    queue.pop_front();
    unsigned du = dist[u];
    const bool u_left = g.is_left(u);
    (u_left ? fb.A : fb.B).push_back(u);
    if (du == r) {
      if (!u_left) fb.boundary_B.push_back(u);
      continue;
    }
    if (calls) ++*calls;
    for (Code w : g.neighbors(u)) {
      if (removed && removed->count(w)) continue;
      auto [it, inserted] = dist.try_emplace(w, du + 1);
      if (inserted) queue.push_back(w);
      // Left vertices at distance r are never expanded; their edges are
      // recorded from the right end.
      if (u_left) {
        edges.emplace_back(u, w);
      } else if (it->second == r) {
        edges.emplace_back(w, u);
      }
    }
  }
  fb.A = make_set(std::move(fb.A));
  fb.B = make_set(std::move(fb.B));
  fb.boundary_B = make_set(std::move(fb.boundary_B));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  fb.E = std::move(edges);
  return fb;
}

namespace {

// Dinic's algorithm. Arcs are scanned in insertion order, so the flow found is
// a function of the order in which the caller adds them.
class Dinic {
 public:
  explicit Dinic(std::size_t n) : head_(n), level_(n), it_(n) {}

  std::size_t add(std::size_t u, std::size_t v, std::int64_t cap) {
    std::size_t id = arcs_.size();
    arcs_.push_back({v, cap});
    arcs_.push_back({u, 0});
    head_[u].push_back(id);
    head_[v].push_back(id + 1);
    return id;
  }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) {
        total += f;
      }
    }
    return total;
  }

  std::int64_t residual(std::size_t arc) const { return arcs_[arc].cap; }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<std::size_t> q{s};
    level_[s] = 0;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      for (std::size_t id : head_[u]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push_back(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t t, std::int64_t f) {
    if (u == t) return f;
    for (std::size_t& i = it_[u]; i < head_[u].size(); ++i) {
      std::size_t id = head_[u][i];
      Arc& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
      if (std::int64_t got = dfs(a.to, t, std::min(f, a.cap))) {
        a.cap -= got;
        arcs_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> head_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace

std::optional<std::map<Code, CodeSet>> finite_harem_match(
    const FiniteBipartite& fg, unsigned k) {
  // Circulation with lower bounds: s->a in [k,k], a->b in [0,1],
  // b->t in [1,1] (interior) or [0,1] (boundary), t->s unbounded.
  const std::size_t s = 0, t = 1, ss = 2, tt = 3, base = 4;
  const std::size_t nA = fg.A.size();
  Dinic net(base + nA + fg.B.size());
  std::unordered_map<Code, std::size_t> node;
  for (std::size_t i = 0; i < nA; ++i) node[fg.A[i]] = base + i;
  for (std::size_t i = 0; i < fg.B.size(); ++i) node[fg.B[i]] = base + nA + i;

  std::vector<std::int64_t> excess(base + nA + fg.B.size(), 0);
  for (Code a : fg.A) {
    excess[node[a]] += k;
    excess[s] -= k;
  }
  std::vector<std::pair<std::size_t, std::pair<Code, Code>>> edge_arcs;
  for (auto [a, b] : fg.E) {
    edge_arcs.push_back({net.add(node.at(a), node.at(b), 1), {a, b}});
  }
  for (Code b : fg.B) {
    if (contains(fg.boundary_B, b)) {
      net.add(node[b], t, 1);
    } else {
      excess[t] += 1;
      excess[node[b]] -= 1;
    }
  }
  net.add(t, s, std::numeric_limits<std::int64_t>::max() / 4);
  std::int64_t need = 0;
  for (std::size_t v = 0; v < excess.size(); ++v) {
    if (excess[v] > 0) {
      net.add(ss, v, excess[v]);
      need += excess[v];
    } else if (excess[v] < 0) {
      net.add(v, tt, -excess[v]);
    }
  }
  if (net.max_flow(ss, tt) != need) return std::nullopt;

  std::map<Code, CodeSet> out;
  for (Code a : fg.A) out[a];
  for (const auto& [arc, e] : edge_arcs) {
    if (net.residual(arc) == 0) out[e.first].push_back(e.second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Back-and-forth
// ---------------------------------------------------------------------------

HaremState::HaremState(std::shared_ptr<const BipartiteGraph> graph,
                       HallWitnessFn h, unsigned k, HaremOptions options)
    : graph_(std::move(graph)), h_(std::move(h)), k_(k), options_(options) {
  if (k == 0) throw Error(ErrorCode::kMalformedInput, "k must be >= 1");
  if (!graph_) throw Error(ErrorCode::kMalformedInput, "no graph");
}

unsigned HaremState::next_radius() const {
  const bool left_step = step_ % 2 == 0;
  std::int64_t hk = h_(k_);
  std::int64_t r = left_step ? std::max<std::int64_t>(2 * hk + 1, 3)
                             : std::max<std::int64_t>(2 * hk + 2, 4);
  if (options_.max_radius) {
    std::int64_t cap = *options_.max_radius;
    if (left_step) {
      if (cap % 2 == 0) --cap;
      cap = std::max<std::int64_t>(cap, 3);
    } else {
      if (cap % 2 == 1) --cap;
      cap = std::max<std::int64_t>(cap, 4);
    }
    r = std::min(r, cap);
  }
  return static_cast<unsigned>(r);
}

std::optional<Code> HaremState::next_unremoved(bool left) {
  const int side = left ? 0 : 1;
  if (exhausted_[side]) return std::nullopt;
  for (;;) {
    auto v = left ? graph_->left_vertex(cursor_[side])
                  : graph_->right_vertex(cursor_[side]);
    if (!v) {
      exhausted_[side] = true;
      return std::nullopt;
    }
    if (!removed_.count(*v)) return v;
    ++cursor_[side];
  }
}

void HaremState::step() {
  bool left_step = step_ % 2 == 0;
  auto v = next_unremoved(left_step);
  if (!v) {
    left_step = !left_step;
    v = next_unremoved(left_step);
  }
  if (!v) {
    ++step_;
    return;
  }
  const unsigned r = next_radius();
  FiniteBipartite fb = induced_ball(*graph_, *v, r, &removed_, &calls_);
  auto m = finite_harem_match(fb, k_);
  if (!m) {
    throw Error(ErrorCode::kInternalInfeasible,
                "finite harem problem infeasible at step " +
                    std::to_string(step_) + " around vertex " +
                    std::to_string(value(*v)) + " (radius " +
                    std::to_string(r) + ")");
  }
  Code a = *v;
  if (!left_step) {
    auto owner = std::find_if(m->begin(), m->end(), [&](const auto& kv) {
      return contains(kv.second, *v);
    });
    if (owner == m->end()) {
      throw Error(ErrorCode::kInternalInfeasible, "right vertex left unmatched");
    }
    a = owner->first;
  }
  const CodeSet& star = m->at(a);
  left_[a] = star;
  removed_.insert(a);
  for (Code b : star) {
    right_[b] = a;
    removed_.insert(b);
  }
  h_ = h_.shifted(k_);
  ++step_;
}

std::string HaremState::dump() const {
  std::ostringstream os;
  for (const auto& [a, bs] : left_) {
    os << "L " << value(a) << " -> ";
    for (std::size_t i = 0; i < bs.size(); ++i) {
      os << (i ? "," : "") << value(bs[i]);
    }
    os << "\n";
  }
  for (const auto& [b, a] : right_) {
    os << "R " << value(b) << " -> " << value(a) << "\n";
  }
  return os.str();
}

std::optional<CodeSet> harem_query(HaremState& st, Code v, Budget budget) {
  const std::uint64_t start = st.neighbor_calls();
  std::uint64_t idle = 0;
  while (!st.removed(v)) {
    if (st.neighbor_calls() - start >= budget.steps) return std::nullopt;
    const std::uint64_t before = st.neighbor_calls();
    st.step();
    // A finite graph whose sides are exhausted makes no further progress.
    idle = st.neighbor_calls() == before ? idle + 1 : 0;
    if (idle > 2) return std::nullopt;
  }
  if (st.graph().is_left(v)) return st.left_matches().at(v);
  return CodeSet{st.right_matches().at(v)};
}

std::vector<SpotViolation> cehhc_spot_check(const BipartiteGraph& g,
                                            const HallWitnessFn& h, unsigned k,
                                            const std::vector<CodeSet>& samples) {
  if (k == 0) throw Error(ErrorCode::kMalformedInput, "k must be >= 1");
  std::vector<SpotViolation> out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const CodeSet X = make_set(samples[i]);
    if (X.empty()) continue;
    const bool left = g.is_left(X.front());
    for (Code x : X) {
      if (g.is_left(x) != left) {
        throw Error(ErrorCode::kMalformedInput, "sample spans both sides");
      }
    }
    std::vector<Code> nb;
    for (Code x : X) {
      auto ns = g.neighbors(x);
      nb.insert(nb.end(), ns.begin(), ns.end());
    }
    const std::uint64_t size = X.size();
    const std::uint64_t nsize = make_set(std::move(nb)).size();
    // The largest n with h(n) <= |X|; past |N(X)| + 1 every n already fails.
    std::uint64_t n = 0;
    while (n <= nsize && h(n + 1) <= static_cast<std::int64_t>(size)) ++n;
    Rational rhs = left ? Rational(nsize) - Rational(k) * size
                        : Rational(nsize) - Rational(size, k);
    if (Rational(n) > rhs) out.push_back({i, n, left, size, nsize});
  }
  return out;
}

}  // namespace amenlab
