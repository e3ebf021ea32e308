#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "connectoid/connectoid.hpp"

namespace connectoid {

using Edge = std::pair<std::string, std::string>;

struct UndirectedGraph {
  std::vector<std::string> vertices;  // endpoints of edges are added implicitly
  std::vector<Edge> edges;
};

struct Digraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;  // (tail, head)
};

enum class Sign { kPlus, kMinus };

struct BidirectedEdge {
  std::string u;
  Sign at_u;
  std::string v;
  Sign at_v;
};

struct BidirectedGraph {
  std::vector<std::string> vertices;
  std::vector<BidirectedEdge> edges;
};

struct Hypergraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
};

struct MatroidCircuits {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> circuits;
};

using StructureSpec =
    std::variant<FiniteFamily, UndirectedGraph, Digraph, BidirectedGraph, Hypergraph, MatroidCircuits>;

/// Edges are the generators; loops are ignored.
Connectoid from_undirected(const UndirectedGraph& g);
/// Vertex sets of directed cycles are the generators. Enumeration of cycles
/// is charged against `budget`.
Connectoid from_digraph(const Digraph& d, std::size_t budget = kDefaultBudget);
/// A set is connected if it is an overlapping union of sets in which every
/// ordered pair is joined by a sign-consistent walk inside the set. At most
/// 16 vertices (UnsupportedSize).
Connectoid from_bidirected(const BidirectedGraph& g);
Connectoid from_hypergraph(const Hypergraph& h);
Connectoid from_matroid_circuits(const MatroidCircuits& m);

Connectoid build_connectoid(const StructureSpec& spec, std::size_t budget = kDefaultBudget);

/// Replaces each vertex v by an edge tail(v) -> head(v); edges into v enter
/// tail(v), edges out of v leave head(v).
Digraph split_digraph(const Digraph& d);

/// True iff `walk_from` can reach `walk_to` by a sign-consistent walk whose
/// vertices lie in `inside` (entering a vertex by one sign, leaving by the
/// other).
bool sign_consistent_walk(const BidirectedGraph& g, const std::string& walk_from,
                          const std::string& walk_to, const std::vector<std::string>& inside);

}  // namespace connectoid
