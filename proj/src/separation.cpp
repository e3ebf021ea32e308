#include "connectoid/separation.hpp"

#include <algorithm>
#include <queue>

#include "connectoid/normal_tree.hpp"

namespace connectoid {

namespace {

/// Position of each element in the sequence; MalformedInput if it repeats
/// or leaves the ground set.
std::vector<std::size_t> positions(const Connectoid& k, const std::vector<Id>& sequence, bool require_all) {
  std::vector<std::size_t> pos(k.universe(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Id s = sequence[i];
    if (s >= k.universe() || !k.ground().test(s)) fail(ErrorKind::kMalformedInput, "sequence leaves the ground set");
    if (pos[s] != static_cast<std::size_t>(-1)) fail(ErrorKind::kMalformedInput, "sequence repeats an element");
    pos[s] = i;
  }
  if (require_all && sequence.size() != k.size()) fail(ErrorKind::kMalformedInput, "sequence misses ground elements");
  return pos;
}

bool separates(const Connectoid& k, Id s, const IdSet& x, const IdSet& preds) {
  return !k.component_of(s, x).intersects(preds);
}

bool isolates(const Connectoid& k, Id s, const IdSet& x, const IdSet& succs) {
  return k.component_of(s, x | succs).count() == 1;
}

template <class Pred>
IdSet minimize(IdSet x, Pred ok) {
  for (Id e : to_ids(x)) {
    x.reset(e);
    if (!ok(x)) x.set(e);
  }
  return x;
}

void check_supplied(const Connectoid& k, const WellOrderWitness& w) {
  if (w.separators && w.separators->size() != k.universe()) {
    fail(ErrorKind::kMalformedInput, "separator map does not match the universe");
  }
}

}  // namespace

OrderReport verify_csn_order(const Connectoid& k, const WellOrderWitness& w) {
  positions(k, w.sequence, true);
  check_supplied(k, w);
  OrderReport report;
  report.separators.assign(k.universe(), k.empty_set());
  IdSet preds = k.empty_set();
  for (Id s : w.sequence) {
    IdSet x;
    if (w.separators) {
      x = (*w.separators)[s];
      if (!x.is_subset_of(preds) || !separates(k, s, x, preds)) {
        report.valid = false;
        report.failing = s;
        return report;
      }
    } else {
      x = k.empty_set();
      const IdSet comp = k.component_of(s, preds);
      for (const IdSet& g : k.generators())
        if (g.intersects(comp)) x |= g & preds;
      x = minimize(x, [&](const IdSet& y) { return separates(k, s, y, preds); });
    }
    report.separators[s] = std::move(x);
    preds.set(s);
  }
  return report;
}

OrderReport verify_ccn_order(const Connectoid& k, const WellOrderWitness& w) {
  const auto pos = positions(k, w.sequence, true);
  check_supplied(k, w);
  OrderReport report;
  report.separators.assign(k.universe(), k.empty_set());
  IdSet preds = k.empty_set();
  for (std::size_t i = 0; i < w.sequence.size(); ++i) {
    const Id s = w.sequence[i];
    IdSet succs = k.ground() - preds;
    succs.reset(s);
    IdSet x;
    if (w.separators) {
      x = (*w.separators)[s];
      if (!x.is_subset_of(preds) || !isolates(k, s, x, succs)) {
        report.valid = false;
        report.failing = s;
        return report;
      }
    } else {
      x = k.empty_set();
      for (auto g : k.generators_at(s)) {
        const IdSet& gen = k.generators()[g];
        if (!gen.intersects(succs)) x |= gen;
      }
      x.reset(s);
      x = minimize(x, [&](const IdSet& y) { return isolates(k, s, y, succs); });
    }
    report.separators[s] = std::move(x);
    preds.set(s);
  }
  (void)pos;
  return report;
}

PrefixReport verify_csn_prefix(const Instance& inst, const std::vector<std::string>& prefix,
                               const std::optional<std::vector<std::vector<std::string>>>& separators,
                               std::size_t radius, std::size_t budget) {
  if (separators && separators->size() != prefix.size()) {
    fail(ErrorKind::kMalformedInput, "separators do not run parallel to the prefix");
  }
  std::vector<std::string> seeds = prefix;
  if (separators)
    for (const auto& x : *separators) seeds.insert(seeds.end(), x.begin(), x.end());
  const Window w = inst.view(seeds, radius, budget);
  const Connectoid& k = w.connectoid;
  std::vector<Id> sequence;
  for (const auto& name : prefix) sequence.push_back(w.id(name));
  positions(k, sequence, false);
  PrefixReport report;
  report.prefix_relative = !inst.is_finite();
  IdSet preds = k.empty_set();
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Id s = sequence[i];
    IdSet x = k.empty_set();
    if (separators) {
      for (const auto& name : (*separators)[i]) x.set(w.id(name));
      if (!x.is_subset_of(preds) || !separates(k, s, x, preds)) {
        report.valid = false;
        report.failing = prefix[i];
        return report;
      }
    } else {
      const IdSet comp = k.component_of(s, preds);
      for (const IdSet& g : k.generators())
        if (g.intersects(comp)) x |= g & preds;
      x = minimize(x, [&](const IdSet& y) { return separates(k, s, y, preds); });
    }
    report.separators.push_back(k.names_of(x));
    ++report.checked;
    preds.set(s);
  }
  return report;
}

WellOrderWitness csn_order_from_nst(const Connectoid& k, const RootedTree& t) {
  if (t.universe() != k.universe() || t.nodes() != k.ground()) {
    fail(ErrorKind::kPreconditionViolated, "tree does not span the ground set");
  }
  if (!is_weak_normal(k, t).weak_normal) fail(ErrorKind::kPreconditionViolated, "tree is not weak normal");
  WellOrderWitness w;
  w.sequence = t.bfs_order();
  w.separators.emplace(k.universe(), k.empty_set());
  for (Id s : w.sequence) (*w.separators)[s] = t.strict_down(s);
  return w;
}

std::vector<std::vector<Id>> WellFoundedPO::lower_covers() const {
  std::vector<std::vector<Id>> below(universe);
  for (auto [u, s] : covers) below[s].push_back(u);
  for (auto& b : below) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  return below;
}

IdSet WellFoundedPO::down_set(Id s) const {
  const auto below = lower_covers();
  IdSet out(universe);
  std::vector<Id> stack{s};
  out.set(s);
  while (!stack.empty()) {
    const Id v = stack.back();
    stack.pop_back();
    for (Id u : below[v]) {
      if (out.test(u)) continue;
      out.set(u);
      stack.push_back(u);
    }
  }
  return out;
}

IdSet WellFoundedPO::strict_down_set(Id s) const {
  IdSet out = down_set(s);
  out.reset(s);
  return out;
}

IdSet WellFoundedPO::up_set(Id s) const {
  std::vector<std::vector<Id>> above(universe);
  for (auto [u, v] : covers) above[u].push_back(v);
  IdSet out(universe);
  std::vector<Id> stack{s};
  out.set(s);
  while (!stack.empty()) {
    const Id v = stack.back();
    stack.pop_back();
    for (Id u : above[v]) {
      if (out.test(u)) continue;
      out.set(u);
      stack.push_back(u);
    }
  }
  return out;
}

WellFoundedPO order_to_wellfounded_po(const Connectoid& k, const WellOrderWitness& w) {
  const OrderReport report = verify_csn_order(k, w);
  if (!report.valid) fail(ErrorKind::kPreconditionViolated, "order does not witness separation");
  const auto pos = positions(k, w.sequence, true);
  WellFoundedPO po;
  po.universe = k.universe();
  for (Id s : w.sequence)
    for_each_id(report.separators[s], [&](Id u) { po.covers.emplace_back(u, s); });

  // The auxiliary tree below s: children of u are X_u. Every branch must
  // descend strictly in the order, which bounds its depth by the position.
  for (Id s : w.sequence) {
    std::size_t visited = 0;
    std::vector<std::pair<Id, std::size_t>> stack{{s, 0}};
    while (!stack.empty()) {
      auto [u, depth] = stack.back();
      stack.pop_back();
      if (depth > pos[s] || ++visited > (std::size_t{1} << 20)) {
        fail(ErrorKind::kConstructionFailed, "auxiliary separator tree is not finite");
      }
      for_each_id(report.separators[u], [&](Id c) {
        if (pos[c] >= pos[u]) fail(ErrorKind::kConstructionFailed, "separator branch does not descend");
        stack.emplace_back(c, depth + 1);
      });
    }
  }
  for (Id s : w.sequence) {
    const IdSet below = po.strict_down_set(s);
    if (!k.component_of(s, below).is_subset_of(po.up_set(s))) {
      fail(ErrorKind::kConstructionFailed, "component above a down-set leaves the up-set");
    }
  }
  return po;
}

WellOrderWitness po_to_order(const WellFoundedPO& po, const IdSet& ground) {
  if (ground.size() != po.universe) fail(ErrorKind::kMalformedInput, "ground set and order use different ids");
  std::vector<std::size_t> indegree(po.universe, 0);
  std::vector<std::vector<Id>> above(po.universe);
  for (auto [u, s] : po.covers) {
    if (!ground.test(u) || !ground.test(s)) fail(ErrorKind::kMalformedInput, "cover leaves the ground set");
    if (u == s) continue;
    above[u].push_back(s);
    ++indegree[s];
  }
  std::priority_queue<Id, std::vector<Id>, std::greater<>> ready;
  for_each_id(ground, [&](Id v) {
    if (indegree[v] == 0) ready.push(v);
  });
  WellOrderWitness w;
  while (!ready.empty()) {
    const Id v = ready.top();
    ready.pop();
    w.sequence.push_back(v);
    for (Id s : above[v])
      if (--indegree[s] == 0) ready.push(s);
  }
  if (w.sequence.size() != ground.count()) fail(ErrorKind::kCycleDetected, "covers contain a cycle");
  w.separators.emplace(po.universe, IdSet(po.universe));
  for (Id s : w.sequence) (*w.separators)[s] = po.strict_down_set(s);
  return w;
}

}  // namespace connectoid
