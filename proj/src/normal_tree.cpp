#include "connectoid/normal_tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace connectoid {

namespace {

void require_nodes_in_ground(const Connectoid& k, const RootedTree& t) {
  if (t.universe() != k.universe()) fail(ErrorKind::kMalformedInput, "tree and connectoid use different ids");
  if (!t.nodes().is_subset_of(k.ground())) {
    fail(ErrorKind::kMalformedInput, "tree has nodes outside the ground set");
  }
}

/// Labels each element of ground \ removed by the index of its component.
std::vector<std::size_t> component_labels(const Connectoid& k, const IdSet& removed) {
  std::vector<std::size_t> label(k.universe(), static_cast<std::size_t>(-1));
  const auto comps = k.components(removed);
  for (std::size_t i = 0; i < comps.size(); ++i) for_each_id(comps[i], [&](Id e) { label[e] = i; });
  return label;
}

}  // namespace

WeakNormalReport check_weak_normal_definition(const Connectoid& k, const RootedTree& t) {
  require_nodes_in_ground(k, t);
  WeakNormalReport report;
  if (t.empty()) return report;
  const auto order = t.bfs_order();

  // Incomparable pairs grouped by their meet m: they violate the first
  // clause iff they share a component of ground \ down(m).
  for (Id m : order) {
    const auto kids = t.children(m);
    if (kids.size() < 2) continue;
    const IdSet below = t.down(m);
    const auto label = component_labels(k, below);
    std::vector<std::pair<Id, std::size_t>> members;  // (node, child branch)
    for (std::size_t b = 0; b < kids.size(); ++b)
      for_each_id(t.up(kids[b]), [&](Id w) { members.emplace_back(w, b); });
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto [u, bu] = members[i];
        const auto [v, bv] = members[j];
        if (bu == bv || label[u] != label[v]) continue;
        report.weak_normal = false;
        report.clause = NormalityClause::kIncomparable;
        report.first = u;
        report.second = v;
        report.witness = *k.connecting_set(u, singleton(k.universe(), v), k.ground() - below);
        return report;
      }
    }
  }

  for (Id u : order) {
    const IdSet comp = k.component_of(u, t.strict_down(u));
    bool ok = true;
    for_each_id(t.strict_up(u), [&](Id v) {
      if (ok && !comp.test(v)) {
        ok = false;
        report.weak_normal = false;
        report.clause = NormalityClause::kComparable;
        report.first = u;
        report.second = v;
      }
    });
    if (!ok) return report;
  }
  return report;
}

WeakNormalReport check_weak_normal_components(const Connectoid& k, const RootedTree& t) {
  require_nodes_in_ground(k, t);
  WeakNormalReport report;
  for (Id v : t.bfs_order()) {
    IdSet comp = component_above(k, t, v);
    const IdSet above = t.up(v);
    const IdSet seen = comp & t.nodes();
    if (seen != above) {
      report.weak_normal = false;
      report.clause = NormalityClause::kComponentAbove;
      report.first = v;
      report.second = first_of(seen ^ above);
      report.witness = std::move(comp);
      return report;
    }
  }
  return report;
}

WeakNormalReport is_weak_normal(const Connectoid& k, const RootedTree& t) {
  auto by_definition = check_weak_normal_definition(k, t);
  auto by_components = check_weak_normal_components(k, t);
  if (by_definition.weak_normal != by_components.weak_normal) {
    throw std::logic_error("weak normality checks disagree");
  }
  return by_definition;
}

IdSet component_above(const Connectoid& k, const RootedTree& t, Id v) {
  if (!t.contains(v)) fail(ErrorKind::kMalformedInput, "not a tree node");
  return k.component_of(v, t.strict_down(v));
}

Id chain_maximum(const RootedTree& t, const IdSet& chain) {
  Id best = kNoId;
  std::size_t best_depth = 0;
  for_each_id(chain, [&](Id v) {
    const std::size_t d = t.depth(v);
    if (best == kNoId || d > best_depth) {
      best = v;
      best_depth = d;
    }
  });
  return best;
}

IdSet neighbourhood_of(const Connectoid& k, const RootedTree& t, const IdSet& comp) {
  require_nodes_in_ground(k, t);
  if (!k.is_component(comp, t.nodes())) {
    fail(ErrorKind::kNoSuchComponent, "set is not a component of the ground set minus the tree");
  }
  IdSet n = k.empty_set();
  for_each_id(t.nodes(), [&](Id v) {
    if (comp.is_subset_of(component_above(k, t, v))) n.set(v);
  });
  const Id top = chain_maximum(t, n);
  if (top != kNoId && t.down(top) != n) {
    fail(ErrorKind::kPreconditionViolated, "neighbourhood is not a down-closed chain");
  }
  if (!k.is_component(comp, n)) {
    fail(ErrorKind::kPreconditionViolated, "component is not separated by its neighbourhood");
  }
  return n;
}

std::optional<IdSet> adhesion_witness(const Connectoid& k, const IdSet& comp, const IdSet& base,
                                      std::size_t bound, std::size_t budget) {
  if (!k.is_component(comp, base)) {
    fail(ErrorKind::kPreconditionViolated, "set is not a component of the ground set minus the base");
  }
  StepBudget steps(budget);
  std::optional<IdSet> found;
  for_each_subset_up_to(k.universe(), to_ids(base), bound, [&](const IdSet& x) {
    steps.charge();
    if (!k.is_component(comp, x)) return true;
    found = x;
    return false;
  });
  if (!found) found = base;
  return found;
}

namespace {

/// Exhaustive search over parent maps on at most eight nodes.
std::optional<RootedTree> exhaustive_normal_tree(const Connectoid& k, Id s, const IdSet& nodes) {
  std::vector<Id> others = to_ids(nodes);
  std::erase(others, s);
  const std::vector<Id> all = to_ids(nodes);
  std::vector<std::pair<Id, Id>> assignment(others.size());
  std::optional<RootedTree> found;
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (found) return;
    if (i == others.size()) {
      try {
        RootedTree t = RootedTree::from_parents(k.universe(), s, assignment);
        if (is_weak_normal(k, t).weak_normal) found = std::move(t);
      } catch (const Error&) {
      }
      return;
    }
    for (Id p : all) {
      if (p == others[i]) continue;
      assignment[i] = {others[i], p};
      assign(i + 1);
    }
  };
  assign(0);
  return found;
}

}  // namespace

RootedTree finite_normal_tree(const Connectoid& k, Id s, const IdSet& x) {
  if (s >= k.universe() || !k.ground().test(s)) fail(ErrorKind::kMalformedInput, "root outside the ground set");
  if (!x.is_subset_of(k.ground())) fail(ErrorKind::kMalformedInput, "target set leaves the ground set");
  IdSet targets = x;
  targets.reset(s);
  if (!targets.is_subset_of(k.component_of(s, k.empty_set()))) {
    fail(ErrorKind::kNotConnected, "targets do not lie in the component of the root");
  }
  RootedTree t(k.universe(), s);
  while (!targets.is_subset_of(t.nodes())) {
    for (const IdSet& comp : k.components(t.nodes())) {
      if (!comp.intersects(targets)) continue;
      const Id top = chain_maximum(t, neighbourhood_of(k, t, comp));
      t.attach(first_of(comp & targets), top);
    }
    if (!is_weak_normal(k, t).weak_normal) {
      IdSet wanted = x;
      wanted.set(s);
      if (wanted.count() <= 8) {
        if (auto alt = exhaustive_normal_tree(k, s, wanted)) return *alt;
      }
      fail(ErrorKind::kConstructionFailed, "iterative attachment produced a tree that is not weak normal");
    }
  }
  return t;
}

RootedTree extend_normal_tree(const Connectoid& k, const RootedTree& t,
                              const std::vector<std::pair<IdSet, RootedTree>>& subtrees) {
  require_nodes_in_ground(k, t);
  RootedTree out = t;
  for (const auto& [comp, sub] : subtrees) {
    if (sub.empty()) continue;
    if (!k.is_component(comp, t.nodes())) {
      fail(ErrorKind::kPreconditionViolated, "subtree given for a set that is not a component");
    }
    if (sub.universe() != k.universe() || !sub.nodes().is_subset_of(comp)) {
      fail(ErrorKind::kPreconditionViolated, "subtree leaves its component");
    }
    if (!is_weak_normal(k.induced(comp), sub).weak_normal) {
      fail(ErrorKind::kPreconditionViolated, "subtree is not weak normal in its component");
    }
    const Id top = chain_maximum(t, neighbourhood_of(k, t, comp));
    if (top == kNoId) fail(ErrorKind::kPreconditionViolated, "component has an empty neighbourhood");
    out.attach(sub.root(), top);
    for (auto [p, c] : sub.edges()) out.attach(c, p);
  }
  if (!is_weak_normal(k, out).weak_normal) {
    fail(ErrorKind::kConstructionFailed, "extended tree is not weak normal");
  }
  return out;
}

}  // namespace connectoid
