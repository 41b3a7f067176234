#include <doctest.h>

#include "group.hpp"
#include "paradox.hpp"

using namespace amenlab;

namespace {

// Hides every partner behind a swap of two right codes.
class Corrupted final : public DecompositionView {
 public:
  explicit Corrupted(DecompositionView& inner) : inner_(inner) {}
  const Group& group() const override { return inner_.group(); }
  const CodeSet& key() const override { return inner_.key(); }
  std::optional<std::pair<Code, Code>> partners(Code m, Budget b) override {
    auto p = inner_.partners(m, b);
    if (p && value(m) == 1) {
      auto q = inner_.partners(code(0), b);
      if (q) p->first = q->first;
    }
    return p;
  }
  std::optional<Code> phi(Code h, Budget b) override { return inner_.phi(h, b); }

 private:
  DecompositionView& inner_;
};

HaremOptions capped() { return HaremOptions{3}; }

}  // namespace

TEST_CASE("expand_key") {
  CHECK(minimal_n1(1) == 2);
  CHECK(minimal_n1(2) == 3);
  Group g = make_group("free:2");
  auto key = expand_key(g, parse_element_list(g, "a,a^-1,b,b^-1"), 1);
  CHECK(key.n1 == 2);
  CHECK(key.K.size() == 17);
  CHECK(key.K == ball(g, parse_element_list(g, "a,b"), 2));
}

TEST_CASE("Cayley bipartite graph") {
  Group g = make_group("free:2");
  CodeSet K = ball(g, parse_element_list(g, "a,b"), 2);
  CayleyBipartite gamma(g, K);
  CHECK(gamma.degree(CayleyBipartite::left(code(0))) == K.size());
  for (std::uint64_t x = 0; x < 30; ++x) {
    for (Code r : gamma.neighbors(CayleyBipartite::left(code(x)))) {
      CHECK_FALSE(gamma.is_left(r));
      CHECK(contains(gamma.neighbors(r), CayleyBipartite::left(code(x))));
    }
  }
  CayleyBipartite trivial(g, {g.identity()});
  CHECK(trivial.neighbors(CayleyBipartite::left(code(7))) ==
        CodeSet{CayleyBipartite::right(code(7))});
}

TEST_CASE("decomposition pipeline on free:2") {
  Group g = make_group("free:2");
  auto d = build_decomposition(g, parse_element_list(g, "a,a^-1,b,b^-1"), 1, capped());
  CHECK(d->expanded_key().n1 == 2);
  CHECK(d->key().size() == 17);
  auto r0 = d->resolve(code(0), Budget{});
  REQUIRE(r0);
  CHECK(contains(d->key(), r0->theta1));
  CHECK(contains(d->key(), r0->theta2));
  CHECK(r0->psi1 < r0->psi2);

  auto rep = verify_decomposition_prefix(*d, 12, Budget{});
  CHECK(rep.unresolved.empty());
  CHECK(rep.violations.empty());
  CHECK(rep.resolved.size() == 12);

  int in_a = 0;
  for (Code k : d->key()) {
    in_a += decomp_membership(*d, k, code(0), Side::kA, Budget{}) == Membership::kIn;
  }
  CHECK(in_a == 1);
  CHECK_THROWS_AS(decomp_membership(*d, code(999), code(0), Side::kA, Budget{}), Error);
  CHECK(decomp_membership(*d, d->key()[0], code(100000), Side::kB, Budget{2}) ==
        Membership::kUnknown);
}

TEST_CASE("the verifier catches a corrupted decomposition") {
  Group g = make_group("free:2");
  auto d = build_decomposition(g, parse_element_list(g, "a,A,b,B"), 1, capped());
  Corrupted bad(*d);
  CHECK_FALSE(verify_decomposition_prefix(bad, 4, Budget{}).violations.empty());
}

TEST_CASE("classical first-letter decomposition") {
  ClassicalFreeDecomposition c;
  auto rep = verify_decomposition_prefix(c, 200, Budget{});
  CHECK(rep.violations.empty());
  CHECK(rep.unresolved.empty());
}

TEST_CASE("expansion of the key") {
  Group g = make_group("free:2");
  auto key = expand_key(g, parse_element_list(g, "a,A,b,B"), 1);
  CodeSet F = make_set({code(0), code(1), code(6), code(20)});
  CHECK(set_product(g, key.K, F).size() >= 3 * F.size());
}
