#include "connectoid/partition_tree.hpp"

#include "connectoid/normal_tree.hpp"

namespace connectoid {

std::vector<IdSet> PartitionTree::part_list() const {
  std::vector<IdSet> out;
  for_each_id(tree.nodes(), [&](Id t) { out.push_back(parts[t]); });
  return out;
}

namespace {

IdSet union_of(const Connectoid& k, const std::vector<IdSet>& parts, const IdSet& nodes) {
  IdSet out = k.empty_set();
  for_each_id(nodes, [&](Id t) { out |= parts[t]; });
  return out;
}

/// K_t: the component of ground \ P(strict down-set of t) containing P_t.
IdSet part_component(const Connectoid& k, const RootedTree& t, const std::vector<IdSet>& parts, Id node) {
  return k.component_of(first_of(parts[node]), union_of(k, parts, t.strict_down(node)));
}

}  // namespace

TConnectoidReport verify_t_connectoid(const Connectoid& kp, const RootedTree& t) {
  if (t.universe() != kp.universe() || t.nodes() != kp.ground()) {
    fail(ErrorKind::kMalformedInput, "tree does not span the part ground set");
  }
  TConnectoidReport report;
  const WeakNormalReport normal = is_weak_normal(kp, t);
  if (!normal.weak_normal) {
    report.ok = false;
    report.clause = normal.clause == NormalityClause::kIncomparable ? "incomparable" : "comparable";
    report.first = normal.first;
    report.second = normal.second;
    return report;
  }
  for (Id v : t.bfs_order()) {
    const Id p = t.parent(v);
    if (p == kNoId) continue;
    IdSet allowed = t.up(p) - t.strict_up(v);
    if (!kp.component_within(p, allowed).test(v)) {
      report.ok = false;
      report.clause = "cofinal";
      report.first = p;
      report.second = v;
      return report;
    }
  }
  for (Id v : t.bfs_order()) {
    for_each_id(t.strict_down(v), [&](Id u) {
      if (!report.ok) return;
      IdSet allowed = t.up(u) - t.strict_up(v);
      if (!kp.component_within(u, allowed).test(v)) {
        report.ok = false;
        report.clause = "interval";
        report.first = u;
        report.second = v;
      }
    });
    if (!report.ok) return report;
  }
  return report;
}

PartitionTree build_normal_partition_tree(const Connectoid& k, const std::vector<Id>& order) {
  if (!k.is_connected(k.ground())) fail(ErrorKind::kNotConnected, "connectoid is not connected");
  IdSet seen = k.empty_set();
  for (Id s : order) {
    if (s >= k.universe() || !k.ground().test(s) || seen.test(s)) {
      fail(ErrorKind::kMalformedInput, "order is not a permutation of the ground set");
    }
    seen.set(s);
  }
  if (seen != k.ground()) fail(ErrorKind::kMalformedInput, "order misses ground elements");

  PartitionTree pt;
  pt.parts.assign(k.universe(), k.empty_set());
  IdSet covered = k.empty_set();
  Id next = 0;
  bool started = false;
  for (Id s : order) {
    if (covered.test(s)) continue;
    const IdSet comp = k.component_of(s, covered);
    if (!started) {
      pt.tree = RootedTree(k.universe(), next);
      pt.parts[next] = singleton(k.universe(), s);
      covered |= pt.parts[next];
      ++next;
      started = true;
      continue;
    }
    IdSet chain(k.universe());
    for_each_id(pt.tree.nodes(), [&](Id t) {
      if (comp.is_subset_of(part_component(k, pt.tree, pt.parts, t))) chain.set(t);
    });
    const Id m = chain_maximum(pt.tree, chain);
    if (m == kNoId) fail(ErrorKind::kConstructionFailed, "component lies below no part");
    if (pt.tree.down(m) != chain) fail(ErrorKind::kConstructionFailed, "M_K is not a down-closed chain");
    const IdSet km = part_component(k, pt.tree, pt.parts, m);
    const auto h = k.connecting_set(s, pt.parts[m], km);
    if (!h) fail(ErrorKind::kConstructionFailed, "no connected set joins the element to its part");
    pt.parts[next] = connected_closure(k, comp, *h & comp);
    pt.tree.attach(next, m);
    covered |= pt.parts[next];
    ++next;
  }
  // Re-home the tree on exactly `next` part ids.
  std::vector<std::pair<Id, Id>> edges;
  for (auto [p, c] : pt.tree.edges()) edges.emplace_back(c, p);
  pt.tree = RootedTree::from_parents(next, pt.tree.root(), edges);
  pt.parts.resize(next);
  return pt;
}

PartitionInvariantReport check_partition_invariants(const Connectoid& k, const PartitionTree& pt) {
  const RootedTree& t = pt.tree;
  PartitionInvariantReport report;
  auto fail_with = [&](char clause, Id a, Id b) {
    report.ok = false;
    report.clause = clause;
    report.first = a;
    report.second = b;
    return report;
  };
  if (pt.parts.size() != t.universe() || t.nodes().count() != t.universe()) {
    fail(ErrorKind::kMalformedInput, "parts do not match the tree nodes");
  }
  IdSet covered = k.empty_set();
  for (Id v : t.bfs_order()) {
    const IdSet& p = pt.parts[v];
    if (p.none() || !k.is_connected(p)) return fail_with('c', v, kNoId);
    if (covered.intersects(p)) return fail_with('d', v, kNoId);
    covered |= p;
  }
  if (covered != k.ground()) return fail_with('d', kNoId, kNoId);

  const auto order = t.bfs_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Id a = order[i];
      const Id b = order[j];
      if (t.comparable(a, b)) continue;
      const IdSet removed = union_of(k, pt.parts, t.down(a) & t.down(b));
      if (k.component_of(first_of(pt.parts[a]), removed).intersects(pt.parts[b])) return fail_with('a', a, b);
    }
  }
  for (Id v : order) {
    const Id p = t.parent(v);
    if (p == kNoId) continue;
    const IdSet kv = part_component(k, t, pt.parts, v);
    const IdSet kp = part_component(k, t, pt.parts, p);
    const IdSet allowed = (kp - kv) | pt.parts[v];
    if (!k.component_within(first_of(pt.parts[v]), allowed).intersects(pt.parts[p])) return fail_with('b', p, v);
  }
  return report;
}

ContractedPartitionTree contract_partition_tree(const Connectoid& k, const PartitionTree& pt) {
  ContractedPartitionTree out{contract(k, pt.part_list()), RootedTree()};
  std::vector<Id> to_quotient(pt.parts.size(), kNoId);
  for (Id t = 0; t < pt.parts.size(); ++t) to_quotient[t] = out.quotient.part_of(first_of(pt.parts[t]));
  std::vector<std::pair<Id, Id>> edges;
  for (auto [p, c] : pt.tree.edges()) edges.emplace_back(to_quotient[c], to_quotient[p]);
  out.tree = RootedTree::from_parents(out.quotient.connectoid.universe(), to_quotient[pt.tree.root()], edges);
  return out;
}

}  // namespace connectoid
