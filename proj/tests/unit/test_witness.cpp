#include <doctest.h>

#include "folner.hpp"
#include "group.hpp"
#include "witness.hpp"

using namespace amenlab;

namespace {

CodeSet S(const Group& g, const char* text) { return make_set(parse_element_list(g, text)); }

}  // namespace

TEST_CASE("commutation decider") {
  Group f = make_group("free:2");
  auto w = decide_witness_commutation(f, S(f, "a,b"));
  CHECK(w.verdict == Verdict::kWitness);
  REQUIRE(w.pair);
  CHECK(f.mult(w.pair->first, w.pair->second) != f.mult(w.pair->second, w.pair->first));
  CHECK(decide_witness_commutation(f, S(f, "a,a^2")).verdict == Verdict::kNotWitness);
  CHECK(decide_witness_commutation(f, {f.identity()}).verdict == Verdict::kNotWitness);
  Group z = make_group("zd:2");
  CHECK(decide_witness_commutation(z, S(z, "(1,0),(0,1)")).verdict == Verdict::kNotWitness);
  auto l = decide_witness_commutation(make_group("lamplighter"), {code(1)});
  CHECK(l.rationale == "amenable family");
  CHECK_THROWS_AS(decide_witness_commutation(make_group("redundant-z"), {code(1)}), Error);
}

TEST_CASE("bounded refutation") {
  Group z = make_group("zd:1");
  auto r = refute_witness_bounded(z, S(z, "+1"), 5, 8, Budget{});
  CHECK(r.status == RefuteStatus::kFound);
  REQUIRE(r.certificate);
  CHECK(r.certificate->F.size() == 5);

  auto id = refute_witness_bounded(z, {z.identity()}, 1, 3, Budget{});
  REQUIRE(id.certificate);
  CHECK(id.certificate->F == CodeSet{code(0)});

  Group f = make_group("free:2");
  auto none = refute_witness_bounded(f, S(f, "a,A,b,B"), 4, 4, Budget{});
  CHECK(none.status == RefuteStatus::kNoneFound);
  auto starved = refute_witness_bounded(f, S(f, "a,A,b,B"), 4, 6, Budget{100});
  CHECK(starved.status == RefuteStatus::kUnknown);
}

TEST_CASE("subgroup membership") {
  Group f = make_group("free:2");
  auto H = subgroup_membership(f, S(f, "a"));
  CHECK(H->method() == SubgroupMethod::kStallings);
  CHECK(H->contains(parse_element(f, "a^3")));
  CHECK(H->contains(parse_element(f, "a^-2")));
  CHECK_FALSE(H->contains(parse_element(f, "b")));
  CHECK(H->contains(f.identity()));

  auto H2 = subgroup_membership(f, S(f, "ab,ba"));
  CHECK(H2->contains(parse_element(f, "abba")));
  CHECK(H2->contains(parse_element(f, "a^-1b^-1ab")));
  CHECK_FALSE(H2->contains(parse_element(f, "a")));
  CHECK_FALSE(H2->contains(parse_element(f, "a^2")));

  Group z = make_group("zd:2");
  auto L = subgroup_membership(z, S(z, "(2,0),(0,3)"));
  CHECK(L->method() == SubgroupMethod::kLattice);
  CHECK(L->contains(parse_element(z, "(4,3)")));
  CHECK_FALSE(L->contains(parse_element(z, "(1,0)")));
  CHECK(L->contains(z.identity()));
  auto L2 = subgroup_membership(z, S(z, "(2,1),(1,2)"));
  CHECK(L2->contains(parse_element(z, "(3,3)")));
  CHECK(L2->contains(parse_element(z, "(1,-1)")));
  CHECK_FALSE(L2->contains(parse_element(z, "(1,0)")));

  CHECK_THROWS_AS(subgroup_membership(make_group("cyclic:4"), {code(1)}), Error);
}

TEST_CASE("restricting a Følner set to a subgroup") {
  Group z = make_group("zd:2");
  const std::uint64_t m = 5;
  CodeSet F, row;
  for (std::uint64_t i = 0; i < m; ++i) {
    for (int j = 0; j < 2; ++j) {
      Code c = parse_element(z, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      F.push_back(c);
      if (j == 0) row.push_back(c);
    }
  }
  CodeSet K = S(z, "(1,0)");
  auto slice = restrict_folner_to_subgroup(z, K, m, make_set(F));
  CHECK(slice == make_set(row));
  CHECK(restrict_folner_to_subgroup(z, K, m, make_set(row)) == make_set(row));

  Group f = make_group("free:2");
  CodeSet Fa, powers;
  for (std::uint64_t i = 0; i < 8; ++i) {
    Code c = parse_element(f, "a^" + std::to_string(i));
    Fa.push_back(c);
    powers.push_back(c);
  }
  Fa.push_back(parse_element(f, "b"));
  CHECK(restrict_folner_to_subgroup(f, S(f, "a"), 4, make_set(Fa)) == make_set(powers));

  CHECK_THROWS_AS(restrict_folner_to_subgroup(f, S(f, "a"), 4, S(f, "e,b")), Error);
}
