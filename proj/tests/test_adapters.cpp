#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace connectoid;
using namespace fixtures;

namespace {

std::vector<std::vector<std::string>> connected_sets(const Connectoid& k) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : enumerate_connected_sets(k)) out.push_back(k.names_of(c));
  return out;
}

}  // namespace

TEST_CASE("undirected path") {
  auto sets = connected_sets(p3());
  std::vector<std::vector<std::string>> want{{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}};
  CHECK(sets == want);
}

TEST_CASE("directed path has only trivial connected sets") {
  CHECK(connected_sets(dipath()).size() == 4);
}

TEST_CASE("matroid triangle") {
  auto k = from_matroid_circuits({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}});
  CHECK(k.is_connected(k.ground()));
}

TEST_CASE("hypergraph edges connect") {
  auto k = from_hypergraph({{"a", "b", "c", "d"}, {{"a", "b", "c"}, {"c", "d"}}});
  CHECK(k.is_connected(k.ground()));
  CHECK_FALSE(k.is_connected(k.set_of({"a", "b"})));
}

TEST_CASE("split digraph") {
  auto one = split_digraph({{"v"}, {}});
  CHECK(one.vertices.size() == 2);
  REQUIRE(one.edges.size() == 1);
  CHECK(one.edges[0] == Edge{"tail(v)", "head(v)"});

  auto ab = split_digraph({{"a", "b"}, {{"a", "b"}}});
  CHECK(ab.vertices.size() == 4);
  CHECK(ab.edges.size() == 3);
  CHECK(std::find(ab.edges.begin(), ab.edges.end(), Edge{"head(a)", "tail(b)"}) != ab.edges.end());

  auto c6 = split_digraph({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}});
  auto k = from_digraph(c6);
  CHECK(k.size() == 6);
  CHECK(c6.edges.size() == 6);
  CHECK(k.is_connected(k.ground()));
}

TEST_CASE("bidirected graphs") {
  // A two-vertex path with matching signs at the middle gives a walk.
  BidirectedGraph g{{"a", "b", "c"},
                    {{"a", Sign::kPlus, "b", Sign::kMinus}, {"b", Sign::kPlus, "c", Sign::kMinus}}};
  CHECK(sign_consistent_walk(g, "a", "c", {"a", "b", "c"}));
  BidirectedGraph blocked{{"a", "b", "c"},
                          {{"a", Sign::kPlus, "b", Sign::kMinus}, {"b", Sign::kMinus, "c", Sign::kMinus}}};
  CHECK_FALSE(sign_consistent_walk(blocked, "a", "c", {"a", "b", "c"}));
  auto k = from_bidirected(g);
  CHECK(k.size() == 3);
}

TEST_CASE("random digraphs agree with strong connectivity") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + round % 4;
    oracle::Digraph d{n, std::vector<oracle::Mask>(n, 0)};
    Digraph spec{oracle::letters(n), {}};
    std::bernoulli_distribution coin(0.4);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng)) {
          d.out[u] |= oracle::Mask{1} << v;
          spec.edges.emplace_back(spec.vertices[u], spec.vertices[v]);
        }
    auto k = from_digraph(spec);
    for (int c = 0; c < (1 << n); ++c) {
      IdSet s = k.empty_set();
      for (int i = 0; i < n; ++i)
        if (c >> i & 1) s.set(i);
      CHECK(k.is_connected(s) == oracle::strongly_connected(d, c));
    }
  }
}
