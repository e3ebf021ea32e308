#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace connectoid;
using namespace fixtures;

TEST_CASE("validate_family reports axiom violations") {
  CHECK(validate_family({{"a", "b"}, {{}, {"a"}, {"b"}, {"a", "b"}}}).ok);

  auto chain = validate_family({{"a", "b", "c"}, {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}}});
  REQUIRE_FALSE(chain.ok);
  REQUIRE(chain.violations.size() == 1);
  CHECK(chain.violations[0].kind == FamilyViolationKind::kMissingUnion);
  CHECK(chain.violations[0].missing == std::vector<std::string>{"a", "b", "c"});

  auto single = validate_family({{"a", "b"}, {{}, {"a"}, {"a", "b"}}});
  REQUIRE_FALSE(single.ok);
  CHECK(single.violations[0].kind == FamilyViolationKind::kMissingSingleton);
  CHECK(single.violations[0].missing == std::vector<std::string>{"b"});

  CHECK_THROWS_AS(validate_family({{"a"}, {{"z"}}}), Error);
}

TEST_CASE("is_connected on small examples") {
  const auto k = p3();
  CHECK_FALSE(k.is_connected(set(k, {"a", "c"})));
  CHECK(k.is_connected(k.empty_set()));
  CHECK(k.is_connected(k.ground()));
  const auto c3 = c3_directed();
  CHECK(c3.is_connected(c3.ground()));
  CHECK_FALSE(c3.is_connected(set(c3, {"a", "b"})));
}

TEST_CASE("components") {
  const auto k = p3();
  auto comps = k.components(set(k, {"b"}));
  REQUIRE(comps.size() == 2);
  CHECK(k.names_of(comps[0]) == std::vector<std::string>{"a"});
  CHECK(k.names_of(comps[1]) == std::vector<std::string>{"c"});
  CHECK(dipath().components(dipath().empty_set()).size() == 3);
  CHECK(k3().components(k3().empty_set()).size() == 1);
  CHECK(k.components(k.ground()).empty());
}

TEST_CASE("components agree with the maximal connected members of the closed family") {
  for (oracle::FamilyMask f : oracle::connectoid_classes(4)) {
    const auto k = oracle::to_connectoid(f, 4);
    for (int removed = 0; removed < 16; ++removed) {
      IdSet r = k.empty_set();
      for (int i = 0; i < 4; ++i)
        if (removed >> i & 1) r.set(i);
      std::vector<int> got;
      for (const auto& c : k.components(r)) {
        int m = 0;
        for_each_id(c, [&](Id e) { m |= 1 << e; });
        got.push_back(m);
      }
      auto want = oracle::family_components(f, 4, removed);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("contract") {
  const auto k = p3();
  auto q = contract(k, {set(k, {"a", "b"}), set(k, {"c"})});
  CHECK(q.connectoid.size() == 2);
  CHECK(q.connectoid.is_connected(q.connectoid.ground()));
  auto id = contract(k, {set(k, {"a"}), set(k, {"b"}), set(k, {"c"})});
  CHECK(id.connectoid.generators().size() == k.generators().size());
  const auto d = dipath();
  CHECK_THROWS_WITH_AS(contract(d, {set(d, {"a", "b"}), set(d, {"c"})}), doctest::Contains("not connected"), Error);
}

TEST_CASE("torso") {
  const auto k = p3();
  auto t = torso(k, set(k, {"a", "c"}));
  CHECK(t.is_connected(t.ground()));
  auto whole = torso(k, k.ground());
  CHECK_FALSE(whole.is_connected(whole.set_of({"a", "c"})));
  CHECK(whole.is_connected(whole.ground()));
  const auto d = dipath();
  auto td = torso(d, set(d, {"a", "c"}));
  CHECK_FALSE(td.is_connected(td.ground()));
}

TEST_CASE("weak_contract") {
  const auto k = p3();
  auto q = weak_contract(k, {set(k, {"a", "b"}), set(k, {"c"})}, {k.id("a"), k.id("c")});
  CHECK(q.connectoid.is_connected(q.connectoid.ground()));
  auto s = weak_contract(k, {set(k, {"a"}), set(k, {"b"}), set(k, {"c"})}, {k.id("a"), k.id("b"), k.id("c")});
  const IdSet ac = [&] {
    IdSet y = s.connectoid.empty_set();
    y.set(s.part_of(k.id("a")));
    y.set(s.part_of(k.id("c")));
    return y;
  }();
  CHECK_FALSE(s.connectoid.is_connected(ac));
  CHECK(s.connectoid.is_connected(s.connectoid.ground()));
}

TEST_CASE("links") {
  const auto k = p3();
  Link l{set(k, {"a", "b"}), set(k, {"b", "c"}), set(k, {"a"}), set(k, {"c"})};
  CHECK(check_link(k, l));
  CHECK_THROWS_AS(enumerate_links(k, set(k, {"a"}), set(k, {"a"}), 3), Error);
  auto links = enumerate_links(k, set(k, {"a"}), set(k, {"c"}), 3);
  REQUIRE(links.links.size() == 1);
  CHECK(links.links[0].c1 == set(k, {"a", "b"}));
  CHECK(links.links[0].c2 == set(k, {"b", "c"}));
}

TEST_CASE("strong subsets") {
  const auto k = p3();
  auto r = is_strong_subset(k, set(k, {"a", "c"}), 1);
  CHECK_FALSE(r.strong);
  CHECK(r.separator == set(k, {"b"}));
  CHECK(r.connected == k.ground());
  CHECK(is_strong_subset(k, set(k, {"a", "b"}), 1).strong);
  CHECK(is_strong_subset(k, k.ground(), 3).strong);
}

TEST_CASE("connected_closure") {
  const auto k = p3();
  CHECK(connected_closure(k, k.ground(), set(k, {"a", "c"})) == k.ground());
  CHECK(connected_closure(k, k.ground(), set(k, {"b"})) == set(k, {"b"}));
  const auto t = k3();
  CHECK(connected_closure(t, t.ground(), set(t, {"b", "c"})) == set(t, {"b", "c"}));
  CHECK_THROWS_AS(connected_closure(k, set(k, {"a", "c"}), set(k, {"a"})), Error);
}

TEST_CASE("enumerate_connected_sets matches the closed family") {
  for (oracle::FamilyMask f : oracle::connectoid_classes(4)) {
    const auto k = oracle::to_connectoid(f, 4);
    std::vector<int> got;
    for (const auto& c : enumerate_connected_sets(k)) {
      int m = 0;
      for_each_id(c, [&](Id e) { m |= 1 << e; });
      got.push_back(m);
    }
    std::vector<int> want;
    for (int s = 0; s < 16; ++s)
      if (oracle::family_contains(f, s)) want.push_back(s);
    std::sort(got.begin(), got.end());
    CHECK(got == want);
  }
}

TEST_CASE("malformed bonds are rejected") {
  CHECK_THROWS_AS(Connectoid::from_bonds({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(Connectoid::from_bonds({"a", "b"}, {{"a", "z"}}), Error);
}
