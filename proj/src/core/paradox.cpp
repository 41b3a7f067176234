#include "paradox.hpp"

#include <map>
#include <set>

#include "coding.hpp"

namespace amenlab {

std::uint64_t minimal_n1(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kMalformedInput, "n must be >= 1");
  BigInt lhs = n + 1, rhs = BigInt(3) * n;
  std::uint64_t n1 = 1;
  while (lhs < rhs) {
    lhs *= n + 1;
    rhs *= n;
    ++n1;
  }
  return n1;
}

CodeSet set_product(const Group& g, const CodeSet& A, const CodeSet& B) {
  std::vector<Code> out;
  out.reserve(A.size() * B.size());
  for (Code a : A) {
    for (Code b : B) out.push_back(g.family().canonical(g.mult(a, b)));
  }
  return make_set(std::move(out));
}

ExpandedKey expand_key(const Group& g, const CodeSet& K0, std::uint64_t n) {
  if (g.mode() != Mode::kComputable) {
    throw Error(ErrorCode::kWrongMode, "expand_key needs a computable group");
  }
  if (K0.empty()) throw Error(ErrorCode::kEmptySet, "K0 is empty");
  ExpandedKey out;
  out.n1 = minimal_n1(n);
  std::vector<Code> k1(K0.begin(), K0.end());
  k1.push_back(g.identity());
  CodeSet K1 = make_set(std::move(k1));
  out.K = K1;
  for (std::uint64_t i = 1; i < out.n1; ++i) out.K = set_product(g, out.K, K1);
  return out;
}

// ---------------------------------------------------------------------------
// Γ_K(G)
// ---------------------------------------------------------------------------

CayleyBipartite::CayleyBipartite(Group g, CodeSet K)
    : g_(std::move(g)), K_(make_set(std::move(K))) {
  if (K_.empty()) throw Error(ErrorCode::kEmptySet, "key is empty");
  std::vector<Code> inv;
  for (Code k : K_) inv.push_back(g_.inv(k));
  K_inv_ = make_set(std::move(inv));
}

Code CayleyBipartite::left(Code g) {
  return code(coding::checked_mul(value(g), 2));
}

Code CayleyBipartite::right(Code h) {
  return code(coding::checked_add(coding::checked_mul(value(h), 2), 1));
}

CodeSet CayleyBipartite::neighbors(Code v) const {
  std::vector<Code> out;
  const Code x = untag(v);
  if (is_left(v)) {
    for (Code k : K_) out.push_back(right(g_.mult(k, x)));
  } else {
    for (Code k : K_inv_) out.push_back(left(g_.mult(k, x)));
  }
  return make_set(std::move(out));
}

std::size_t CayleyBipartite::degree(Code) const { return K_.size(); }

std::optional<Code> CayleyBipartite::left_vertex(std::uint64_t i) const {
  if (!g_.family().valid(code(i))) return std::nullopt;
  return left(code(i));
}

std::optional<Code> CayleyBipartite::right_vertex(std::uint64_t i) const {
  if (!g_.family().valid(code(i))) return std::nullopt;
  return right(code(i));
}

// ---------------------------------------------------------------------------
// Views
// ---------------------------------------------------------------------------

std::optional<Resolution> DecompositionView::resolve(Code m, Budget b) {
  auto p = partners(m, b);
  if (!p) return std::nullopt;
  Resolution r;
  r.m = m;
  r.psi1 = std::min(p->first, p->second);
  r.psi2 = std::max(p->first, p->second);
  const Code m_inv = group().inv(m);
  r.theta1 = group().mult(r.psi1, m_inv);
  r.theta2 = group().mult(r.psi2, m_inv);
  return r;
}

Decomposition::Decomposition(Group g, ExpandedKey key, HaremOptions options)
    : g_(std::move(g)),
      key_(std::move(key)),
      graph_(std::make_shared<CayleyBipartite>(g_, key_.K)),
      state_(graph_, HallWitnessFn::affine(2), 2, options) {}

std::optional<std::pair<Code, Code>> Decomposition::partners(Code m, Budget b) {
  auto p = harem_query(state_, CayleyBipartite::left(m), b);
  if (!p) return std::nullopt;
  if (p->size() != 2) {
    throw Error(ErrorCode::kInternalInfeasible, "left vertex without two partners");
  }
  return std::pair{CayleyBipartite::untag((*p)[0]), CayleyBipartite::untag((*p)[1])};
}

std::optional<Code> Decomposition::phi(Code h, Budget b) {
  auto p = harem_query(state_, CayleyBipartite::right(h), b);
  if (!p) return std::nullopt;
  return CayleyBipartite::untag(p->front());
}

std::vector<std::string> Decomposition::internal_violations() const {
  std::vector<std::string> out;
  std::map<Code, int> hits;
  for (const auto& [a, star] : state_.left_matches()) {
    if (star.size() != 2) {
      out.push_back("left " + std::to_string(value(a)) + " has " +
                    std::to_string(star.size()) + " partners");
    }
    CodeSet nb = graph_->neighbors(a);
    for (Code b : star) {
      ++hits[b];
      if (!contains(nb, b)) {
        out.push_back("pair " + std::to_string(value(a)) + "-" +
                      std::to_string(value(b)) + " is not an edge");
      }
    }
  }
  for (const auto& [b, a] : state_.right_matches()) {
    auto it = state_.left_matches().find(a);
    if (it == state_.left_matches().end() || !contains(it->second, b)) {
      out.push_back("right " + std::to_string(value(b)) +
                    " points to a star that does not contain it");
    }
    if (hits[b] != 1) {
      out.push_back("right " + std::to_string(value(b)) + " hit " +
                    std::to_string(hits[b]) + " times");
    }
  }
  if (hits.size() != state_.right_matches().size()) {
    out.push_back("matched right vertices missing from the inverse map");
  }
  return out;
}

std::unique_ptr<Decomposition> build_decomposition(const Group& g,
                                                   const CodeSet& K0,
                                                   std::uint64_t n,
                                                   HaremOptions options) {
  return std::make_unique<Decomposition>(g, expand_key(g, K0, n), options);
}

Membership decomp_membership(DecompositionView& d, Code k, Code m, Side side,
                             Budget b) {
  if (!contains(d.key(), k)) {
    throw Error(ErrorCode::kKeyNotInK,
                "code " + std::to_string(value(k)) + " is not in the key");
  }
  auto r = d.resolve(m, b);
  if (!r) return Membership::kUnknown;
  Code theta = side == Side::kA ? r->theta1 : r->theta2;
  return theta == k ? Membership::kIn : Membership::kOut;
}

VerifyReport verify_decomposition_prefix(DecompositionView& d,
                                         std::uint64_t count, Budget b) {
  VerifyReport rep;
  const Group& g = d.group();
  auto name = [&](Code c) { return std::to_string(value(c)); };
  std::map<Code, Code> image1, image2;  // ψ value -> m

  for (std::uint64_t i = 0; i < count; ++i) {
    const Code m = code(i);
    if (!g.family().valid(m)) break;
    auto r = d.resolve(m, b);
    if (!r) {
      rep.unresolved.push_back(m);
      continue;
    }
    rep.resolved.push_back(*r);
    const std::string tag = "m=" + name(m) + ": ";
    for (int side = 0; side < 2; ++side) {
      Code theta = side == 0 ? r->theta1 : r->theta2;
      Code psi = side == 0 ? r->psi1 : r->psi2;
      std::size_t blocks = 0;
      for (Code k : d.key()) blocks += (k == theta);
      if (blocks != 1) {
        rep.violations.push_back(tag + "lies in " + std::to_string(blocks) +
                                 (side == 0 ? " sets A_k" : " sets B_k"));
      }
      if (g.mult(theta, m) != psi) {
        rep.violations.push_back(tag + "theta" + std::to_string(side + 1) +
                                 "*m differs from psi" + std::to_string(side + 1));
      }
      auto back = d.phi(psi, b);
      if (back && *back != m) {
        rep.violations.push_back(tag + "phi(psi" + std::to_string(side + 1) +
                                 ") = " + name(*back));
      }
    }
    if (r->psi1 == r->psi2) rep.violations.push_back(tag + "psi1 = psi2");
    for (auto [images, psi, label] :
         {std::tuple{&image1, r->psi1, "psi1"}, std::tuple{&image2, r->psi2, "psi2"}}) {
      auto [it, fresh] = images->try_emplace(psi, m);
      if (!fresh) {
        rep.violations.push_back(std::string(label) + " not injective: " +
                                 name(it->second) + " and " + name(m) +
                                 " both map to " + name(psi));
      }
    }
  }
  for (const auto& [psi, m] : image1) {
    auto it = image2.find(psi);
    if (it != image2.end()) {
      rep.violations.push_back("psi1(" + name(m) + ") = psi2(" + name(it->second) +
                               ") = " + name(psi));
    }
  }

  for (std::uint64_t i = 0; i < count; ++i) {
    const Code h = code(i);
    if (!g.family().valid(h)) break;
    auto m = d.phi(h, b);
    if (!m) continue;
    auto p = d.partners(*m, b);
    if (p && p->first != h && p->second != h) {
      rep.violations.push_back("right " + name(h) + ": phi gives " + name(*m) +
                               " whose partners miss it");
    }
  }
  for (auto& v : d.internal_violations()) rep.violations.push_back(std::move(v));
  return rep;
}

// ---------------------------------------------------------------------------
// First-letter fixture
// ---------------------------------------------------------------------------

namespace {

enum class Piece { kP1, kP2, kP3, kP4 };

// P1 = words starting with a, and the powers A^n (n >= 0); P2 = the rest of
// the words starting with A; P3, P4 = words starting with b, B.
Piece piece(const FreeGroup& f, Code m) {
  auto w = f.decode(m);
  if (w.empty()) return Piece::kP1;
  switch (w.front()) {
    case 0: return Piece::kP1;
    case 1:
      return std::all_of(w.begin(), w.end(), [](unsigned l) { return l == 1; })
                 ? Piece::kP1
                 : Piece::kP2;
    case 2: return Piece::kP3;
    default: return Piece::kP4;
  }
}

}  // namespace

ClassicalFreeDecomposition::ClassicalFreeDecomposition()
    : g_(make_group("free:2")) {
  K_ = make_set({g_.identity(), code(2), code(4)});
}

std::optional<std::pair<Code, Code>> ClassicalFreeDecomposition::partners(
    Code m, Budget) {
  const auto& f = static_cast<const FreeGroup&>(g_.family());
  // G = P1 ⊔ aP2 = P3 ⊔ bP4.
  Piece p = piece(f, m);
  Code first = p == Piece::kP1 ? m : g_.mult(code(2), m);
  Code second = p == Piece::kP3 ? m : g_.mult(code(4), m);
  return std::pair{first, second};
}

std::optional<Code> ClassicalFreeDecomposition::phi(Code h, Budget) {
  const auto& f = static_cast<const FreeGroup&>(g_.family());
  switch (piece(f, h)) {
    case Piece::kP2: return g_.mult(code(1), h);
    case Piece::kP4: return g_.mult(code(3), h);
    default: return h;
  }
}

}  // namespace amenlab
