#include "connectoid/layered_tree.hpp"
#include "connectoid/normal_tree.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace connectoid;
using namespace fixtures;

TEST_CASE("is_weak_normal") {
  const auto k = p3();
  CHECK(is_weak_normal(k, chain(k, {"a", "b", "c"})).weak_normal);
  CHECK(is_weak_normal(k, tree(k, "b", {{"a", "b"}, {"c", "b"}})).weak_normal);

  const auto t = k3();
  auto bad = is_weak_normal(t, tree(t, "a", {{"b", "a"}, {"c", "a"}}));
  CHECK_FALSE(bad.weak_normal);
  CHECK(bad.clause == NormalityClause::kIncomparable);
  CHECK(bad.witness == set(t, {"b", "c"}));
  CHECK_FALSE(check_weak_normal_components(t, tree(t, "a", {{"b", "a"}, {"c", "a"}})).weak_normal);
}

TEST_CASE("component_above") {
  const auto k = p3();
  const auto t = chain(k, {"a", "b", "c"});
  CHECK(component_above(k, t, k.id("b")) == set(k, {"b", "c"}));
  CHECK(component_above(k, t, k.id("a")) == k.ground());
  CHECK(component_above(k, t, k.id("c")) == set(k, {"c"}));
}

TEST_CASE("neighbourhood_of") {
  const auto k = p3();
  RootedTree single(k.universe(), k.id("a"));
  CHECK(neighbourhood_of(k, single, set(k, {"b", "c"})) == set(k, {"a"}));
  CHECK(neighbourhood_of(k, chain(k, {"a", "b"}), set(k, {"c"})) == set(k, {"a", "b"}));
  CHECK_THROWS_AS(neighbourhood_of(k, chain(k, {"a", "b", "c"}), k.empty_set()), Error);
  try {
    neighbourhood_of(k, chain(k, {"a", "b", "c"}), set(k, {"c"}));
    FAIL("expected NoSuchComponent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNoSuchComponent);
  }
}

TEST_CASE("adhesion_witness") {
  const auto k = p3();
  CHECK(*adhesion_witness(k, set(k, {"c"}), set(k, {"a", "b"}), 2, 1000) == set(k, {"b"}));
  CHECK(adhesion_witness(k, set(k, {"c"}), set(k, {"a", "b"}), 0, 1000).has_value());
}

TEST_CASE("finite_normal_tree") {
  const auto k = p3();
  auto t = finite_normal_tree(k, k.id("a"), set(k, {"c"}));
  CHECK(t.nodes() == set(k, {"a", "c"}));
  CHECK(t.parent(k.id("c")) == k.id("a"));
  CHECK(is_weak_normal(k, t).weak_normal);
  CHECK(finite_normal_tree(k, k.id("a"), k.empty_set()).size() == 1);

  const auto tri = k3();
  CHECK(finite_normal_tree(tri, tri.id("a"), set(tri, {"b", "c"})) == chain(tri, {"a", "b", "c"}));
}

TEST_CASE("extend_normal_tree") {
  const auto k = p3();
  RootedTree root(k.universe(), k.id("a"));
  auto out = extend_normal_tree(k, root, {{set(k, {"b", "c"}), chain(k, {"b", "c"})}});
  CHECK(out == chain(k, {"a", "b", "c"}));
  CHECK(extend_normal_tree(k, root, {}) == root);
  const auto tri = k3();
  RootedTree troot(tri.universe(), tri.id("a"));
  CHECK(extend_normal_tree(tri, troot, {{set(tri, {"b", "c"}), chain(tri, {"b", "c"})}}) ==
        chain(tri, {"a", "b", "c"}));
}

TEST_CASE("layered_normal_tree") {
  const auto k = p3();
  auto r = layered_normal_tree(k, k.ground(), k.id("a"));
  CHECK(r.tree == chain(k, {"a", "b", "c"}));
  CHECK(is_weak_normal(k, r.tree).weak_normal);
  CHECK(r.state.rounds.back() == r.tree);

  auto single = layered_normal_tree(k, set(k, {"a"}), k.id("a"));
  CHECK(single.tree.size() == 1);

  Connectoid disconnected = Connectoid::from_bonds({"a", "b"}, {});
  CHECK_THROWS_AS(layered_normal_tree(disconnected, disconnected.ground(), 0), Error);
}

TEST_CASE("layered rounds are nested and weak normal") {
  auto k = from_undirected({{},
                            {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}, {"b", "f"}, {"f", "g"}}});
  auto r = layered_normal_tree(k, k.ground(), k.id("a"));
  CHECK(r.tree.nodes() == k.ground());
  for (std::size_t i = 0; i < r.state.rounds.size(); ++i) {
    CHECK(is_weak_normal(k, r.state.rounds[i]).weak_normal);
    if (i > 0) CHECK(r.state.rounds[i - 1].nodes().is_subset_of(r.state.rounds[i].nodes()));
  }
  for_each_id(r.tree.nodes(), [&](Id v) { CHECK(r.state.theta[v].test(v)); });
}
