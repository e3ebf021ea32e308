#include "connectoid/layered_tree.hpp"

#include <algorithm>
#include <string>

#include "connectoid/normal_tree.hpp"

namespace connectoid {

namespace {

struct PairKey {
  IdSet x;
  IdSet y;
  bool operator<(const PairKey& o) const {
    if (x != o.x) return canonical_less(x, o.x);
    return canonical_less(y, o.y);
  }
};

class LinkRegistry {
 public:
  LinkRegistry(const Connectoid& k, const LayeredTreeOptions& options, StepBudget& steps)
      : k_(k), options_(options), steps_(steps) {}

  /// Least registered link support for {x, y} not contained in `inside`.
  std::optional<IdSet> first_outside(const IdSet& x, const IdSet& y, const IdSet& inside) {
    PairKey key = canonical_less(y, x) ? PairKey{y, x} : PairKey{x, y};
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      RegisteredLinks entry{key.x, key.y, {}};
      const std::size_t remaining = steps_.limit() - steps_.used();
      auto found = enumerate_links(k_, key.x, key.y, options_.link_bound, remaining);
      steps_.charge(found.links.size() + 1);
      for (auto i : found.disjoint_family) entry.supports.push_back(found.links[i].support());
      it = entries_.emplace(std::move(key), std::move(entry)).first;
    }
    for (const auto& support : it->second.supports)
      if (!support.is_subset_of(inside)) return support;
    return std::nullopt;
  }

  std::vector<RegisteredLinks> snapshot() const {
    std::vector<RegisteredLinks> out;
    for (const auto& [key, entry] : entries_) out.push_back(entry);
    return out;
  }

 private:
  const Connectoid& k_;
  const LayeredTreeOptions& options_;
  StepBudget& steps_;
  std::map<PairKey, RegisteredLinks> entries_;
};

/// Nonempty subsets of `pool` with at most `max_size` elements.
std::vector<IdSet> small_subsets(std::size_t universe, const IdSet& pool, std::size_t max_size) {
  std::vector<IdSet> out;
  for_each_subset_up_to(universe, to_ids(pool), max_size, [&](const IdSet& s) {
    if (s.any()) out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace

LayeredTreeResult layered_normal_tree(const Connectoid& k, const std::vector<IdSet>& layers, Id root,
                                      const LayeredTreeOptions& options) {
  if (root >= k.universe() || !k.ground().test(root)) {
    fail(ErrorKind::kMalformedInput, "root outside the ground set");
  }
  if (!k.is_connected(k.ground())) fail(ErrorKind::kNotConnected, "connectoid is not connected");
  IdSet targets = k.empty_set();
  for (const auto& layer : layers) {
    if (!layer.is_subset_of(k.ground())) fail(ErrorKind::kMalformedInput, "layer leaves the ground set");
    targets |= layer;
  }
  StepBudget steps(options.budget);
  LinkRegistry registry(k, options, steps);

  LayeredTreeResult result;
  RootedTree t(k.universe(), root);
  auto& theta = result.state.theta;
  theta.assign(k.universe(), k.empty_set());
  theta[root] = singleton(k.universe(), root);
  result.state.rounds.push_back(t);

  while (!options.rounds || result.state.rounds.size() < *options.rounds) {
    std::vector<std::pair<IdSet, RootedTree>> subtrees;
    for (const IdSet& comp : k.components(t.nodes())) {
      if (!comp.intersects(targets)) continue;
      steps.charge(comp.count());
      std::size_t i = 0;
      while (!layers[i].intersects(comp)) ++i;
      const Id start = first_of(layers[i] & comp);
      const Id attach_at = chain_maximum(t, neighbourhood_of(k, t, comp));
      IdSet wanted = theta[attach_at] & comp;
      wanted.set(start);
      subtrees.emplace_back(comp, finite_normal_tree(k.induced(comp), start, wanted));
    }
    if (subtrees.empty()) break;
    RootedTree next = extend_normal_tree(k, t, subtrees);

    for (Id v : next.bfs_order()) {
      if (t.contains(v)) continue;
      const Id u = next.parent(v);
      const IdSet& base = theta[u];
      IdSet grown = base;
      grown.set(v);
      const auto sides = small_subsets(k.universe(), base, options.link_set_size);
      for (std::size_t a = 0; a < sides.size(); ++a) {
        for (std::size_t b = a + 1; b < sides.size(); ++b) {
          if (sides[a].intersects(sides[b])) continue;
          steps.charge();
          if (auto link = registry.first_outside(sides[a], sides[b], base)) grown |= *link;
        }
      }
      for (Id x : next.path_to(v)) {
        const IdSet above = component_above(k, next, x);
        const IdSet part = grown & above;
        steps.charge(above.count());
        if (!k.is_connected(part)) grown |= connected_closure(k, above, part);
      }
      theta[v] = std::move(grown);
    }
    t = std::move(next);
    result.state.rounds.push_back(t);
  }
  result.tree = t;
  result.state.link_registry = registry.snapshot();
  return result;
}

LayeredTreeResult layered_normal_tree(const Connectoid& k, const IdSet& targets, Id root,
                                      const LayeredTreeOptions& options) {
  std::vector<IdSet> layers;
  for_each_id(targets, [&](Id i) { layers.push_back(singleton(k.universe(), i)); });
  return layered_normal_tree(k, layers, root, options);
}

}  // namespace connectoid
