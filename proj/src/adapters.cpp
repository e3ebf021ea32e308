#include "connectoid/adapters.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace connectoid {

namespace {

std::vector<std::string> vertex_names(std::vector<std::string> listed,
                                      const std::vector<std::vector<std::string>>& groups) {
  std::set<std::string> all(listed.begin(), listed.end());
  if (all.size() != listed.size()) fail(ErrorKind::kMalformedInput, "duplicate vertex id");
  for (const auto& g : groups) all.insert(g.begin(), g.end());
  return {all.begin(), all.end()};
}

std::vector<std::vector<std::string>> as_groups(const std::vector<Edge>& edges) {
  std::vector<std::vector<std::string>> out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return out;
}

}  // namespace

Connectoid from_undirected(const UndirectedGraph& g) {
  auto groups = as_groups(g.edges);
  return Connectoid::from_bonds(vertex_names(g.vertices, groups), groups);
}

Connectoid from_digraph(const Digraph& d, std::size_t budget) {
  auto groups = as_groups(d.edges);
  auto names = vertex_names(d.vertices, groups);
  auto shared = std::make_shared<const ElementNames>(names);
  const std::size_t n = names.size();
  std::vector<std::vector<Id>> out(n);
  for (const auto& [a, b] : d.edges) out[*shared->find(a)].push_back(*shared->find(b));
  for (auto& o : out) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
  }
  StepBudget steps(budget);
  std::set<IdSet, CanonicalLess> cycles;
  // Each simple cycle is found once from its least vertex.
  for (Id start = 0; start < n; ++start) {
    IdSet on_path(n);
    std::function<void(Id)> extend = [&](Id v) {
      on_path.set(v);
      for (Id w : out[v]) {
        steps.charge();
        if (w == start && on_path.count() >= 2) {
          cycles.insert(on_path);
        } else if (w > start && !on_path.test(w)) {
          extend(w);
        }
      }
      on_path.reset(v);
    };
    extend(start);
  }
  IdSet all(n);
  all.set();
  return Connectoid::from_generators(std::move(shared), std::move(all), {cycles.begin(), cycles.end()});
}

bool sign_consistent_walk(const BidirectedGraph& g, const std::string& walk_from,
                          const std::string& walk_to, const std::vector<std::string>& inside) {
  std::set<std::string> allowed(inside.begin(), inside.end());
  if (!allowed.contains(walk_from) || !allowed.contains(walk_to)) return false;
  // state: (vertex, sign of the incidence the walk must leave by)
  std::set<std::pair<std::string, Sign>> seen;
  std::deque<std::pair<std::string, Sign>> queue;
  for (Sign s : {Sign::kPlus, Sign::kMinus}) {
    queue.emplace_back(walk_from, s);
    seen.emplace(walk_from, s);
  }
  auto flip = [](Sign s) { return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus; };
  while (!queue.empty()) {
    auto [v, leave] = queue.front();
    queue.pop_front();
    for (const auto& e : g.edges) {
      for (int dir = 0; dir < 2; ++dir) {
        const std::string& a = dir == 0 ? e.u : e.v;
        const std::string& b = dir == 0 ? e.v : e.u;
        const Sign at_a = dir == 0 ? e.at_u : e.at_v;
        const Sign at_b = dir == 0 ? e.at_v : e.at_u;
        if (a != v || at_a != leave || !allowed.contains(b)) continue;
        if (b == walk_to) return true;
        auto next = std::make_pair(b, flip(at_b));
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return false;
}

Connectoid from_bidirected(const BidirectedGraph& g) {
  std::vector<std::vector<std::string>> groups;
  for (const auto& e : g.edges) groups.push_back({e.u, e.v});
  const auto names = vertex_names(g.vertices, groups);
  auto predicate = [&](std::uint64_t mask) {
    std::vector<std::string> inside;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (mask >> i & 1) inside.push_back(names[i]);
    for (const auto& a : inside)
      for (const auto& b : inside)
        if (a != b && !sign_consistent_walk(g, a, b, inside)) return false;
    return true;
  };
  return Connectoid::from_predicate(names, predicate);
}

Connectoid from_hypergraph(const Hypergraph& h) {
  return Connectoid::from_bonds(vertex_names(h.vertices, h.edges), h.edges);
}

Connectoid from_matroid_circuits(const MatroidCircuits& m) {
  return Connectoid::from_bonds(vertex_names(m.elements, m.circuits), m.circuits);
}

Connectoid build_connectoid(const StructureSpec& spec, std::size_t budget) {
  return std::visit(
      [&](const auto& s) -> Connectoid {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteFamily>) {
          return Connectoid::from_family(s);
        } else if constexpr (std::is_same_v<T, UndirectedGraph>) {
          return from_undirected(s);
        } else if constexpr (std::is_same_v<T, Digraph>) {
          return from_digraph(s, budget);
        } else if constexpr (std::is_same_v<T, BidirectedGraph>) {
          return from_bidirected(s);
        } else if constexpr (std::is_same_v<T, Hypergraph>) {
          return from_hypergraph(s);
        } else {
          return from_matroid_circuits(s);
        }
      },
      spec);
}

Digraph split_digraph(const Digraph& d) {
  auto names = vertex_names(d.vertices, as_groups(d.edges));
  Digraph out;
  for (const auto& v : names) {
    out.vertices.push_back("tail(" + v + ")");
    out.vertices.push_back("head(" + v + ")");
    out.edges.emplace_back("tail(" + v + ")", "head(" + v + ")");
  }
  for (const auto& [a, b] : d.edges) out.edges.emplace_back("head(" + a + ")", "tail(" + b + ")");
  return out;
}

}  // namespace connectoid
