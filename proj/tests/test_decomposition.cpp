#include "connectoid/decomposition.hpp"
#include "connectoid/normal_tree.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace connectoid;
using namespace fixtures;

TEST_CASE("nst_to_td on a path") {
  const auto k = p3();
  auto td = nst_to_td(k, chain(k, {"a", "b", "c"}));
  CHECK(validate_td(k, td).valid);
  CHECK(td.beta[k.id("b")] == set(k, {"b"}));
  CHECK(td.gamma[k.id("b")] == set(k, {"a"}));
  CHECK(td.gamma[k.id("c")] == set(k, {"a", "b"}));
  CHECK(td.gamma[k.id("a")].none());
}

TEST_CASE("nst_to_td on a single node and on the triangle") {
  auto one = Connectoid::from_bonds({"a"}, {});
  auto td = nst_to_td(one, RootedTree(1, 0));
  CHECK(td.tree.size() == 1);
  CHECK(td.tree.edges().empty());

  const auto k = k3();
  auto tri = nst_to_td(k, chain(k, {"a", "b", "c"}));
  CHECK(tri.gamma[k.id("c")] == set(k, {"a", "b"}));
  CHECK(k.is_component(set(k, {"c"}), tri.gamma[k.id("c")]));
  CHECK_THROWS_AS(nst_to_td(k, tree(k, "a", {{"b", "a"}, {"c", "a"}})), Error);
}

TEST_CASE("validate_td rejects bad decompositions") {
  const auto k = p3();
  auto td = nst_to_td(k, chain(k, {"a", "b", "c"}));
  auto overlap = td;
  overlap.beta[k.id("b")] = set(k, {"a", "b"});
  auto r = validate_td(k, overlap);
  CHECK_FALSE(r.valid);
  CHECK(r.kind == TdViolationKind::kNotPartition);

  auto strict = td;
  strict.gamma[k.id("c")] = set(k, {"a"});
  auto s = validate_td(k, strict);
  CHECK_FALSE(s.valid);
  CHECK(s.kind == TdViolationKind::kNotComponent);
  CHECK(s.bag == k.id("c"));
}

TEST_CASE("td_to_nst") {
  for (const auto& k : {p3(), k3()}) {
    auto td = nst_to_td(k, chain(k, {"a", "b", "c"}));
    auto t = td_to_nst(k, td);
    CHECK(t.nodes() == k.ground());
    CHECK(is_weak_normal(k, t).weak_normal);
  }
  auto one = Connectoid::from_bonds({"a"}, {});
  CHECK(td_to_nst(one, nst_to_td(one, RootedTree(1, 0))).size() == 1);
}

TEST_CASE("layers of nst_to_td are the distance classes") {
  const auto k = p3();
  auto t = tree(k, "b", {{"a", "b"}, {"c", "b"}});
  auto layers = td_layers(k, nst_to_td(k, t));
  REQUIRE(layers.size() == 2);
  CHECK(layers[0] == set(k, {"b"}));
  CHECK(layers[1] == set(k, {"a", "c"}));
}
