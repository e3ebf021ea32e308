#include "connectoid/infinitary.hpp"

#include <algorithm>
#include <set>

#include "connectoid/normal_tree.hpp"

namespace connectoid {

namespace {

IdSet ids_in(const Window& w, const Names& names) {
  IdSet s = w.connectoid.empty_set();
  for (const auto& n : names) s.set(w.id(n));
  return s;
}

Names union_of(const std::vector<Names>& groups) {
  std::set<std::string> all;
  for (const auto& g : groups) all.insert(g.begin(), g.end());
  return {all.begin(), all.end()};
}

bool meets(const Names& bead, const std::set<std::string>& x) {
  return std::any_of(bead.begin(), bead.end(), [&](const std::string& e) { return x.contains(e); });
}

}  // namespace

NecklaceWitness path_necklace(std::function<std::string(std::size_t)> vertex, std::size_t prefix) {
  NecklaceWitness w;
  w.extender = [vertex](std::size_t i) { return Names{vertex(i), vertex(i + 1)}; };
  for (std::size_t i = 0; i < prefix; ++i) w.beads.push_back(w.extender(i));
  return w;
}

NecklaceWitness extend_prefix(const NecklaceWitness& w, std::size_t m) {
  NecklaceWitness out = w;
  while (out.extender && out.beads.size() < m) out.beads.push_back(out.extender(out.beads.size()));
  return out;
}

NecklaceReport verify_necklace_prefix(const Instance& inst, const NecklaceWitness& w) {
  if (w.beads.empty()) fail(ErrorKind::kMalformedInput, "necklace prefix has no beads");
  const Window view = inst.view(union_of(w.beads), 0);
  std::vector<IdSet> beads;
  for (const auto& b : w.beads) beads.push_back(ids_in(view, b));
  NecklaceReport report;
  auto reject = [&](std::size_t i, std::size_t j, std::string reason) {
    report.valid = false;
    report.first = i;
    report.second = j;
    report.reason = std::move(reason);
    return report;
  };
  for (std::size_t i = 0; i < beads.size(); ++i) {
    if (beads[i].none()) return reject(i, i, "bead is empty");
    if (!view.connectoid.is_connected(beads[i])) return reject(i, i, "bead is not connected");
  }
  for (std::size_t i = 0; i < beads.size(); ++i) {
    for (std::size_t j = i + 1; j < beads.size(); ++j) {
      const bool hit = beads[i].intersects(beads[j]);
      if (j == i + 1 && !hit) return reject(i, j, "consecutive beads are disjoint");
      if (j > i + 1 && hit) return reject(i, j, "non-consecutive beads meet");
    }
  }
  return report;
}

NecklaceWitness necklace_tail(const Instance& inst, const NecklaceWitness& w, const Names& x,
                              std::size_t budget) {
  if (w.beads.empty()) fail(ErrorKind::kMalformedInput, "necklace prefix has no beads");
  const std::set<std::string> removed(x.begin(), x.end());
  if (removed.empty()) return w;
  StepBudget steps(budget, ErrorKind::kDepthExhausted);
  NecklaceWitness cur = w;
  auto last_meeting = [&]() -> std::ptrdiff_t {
    for (std::size_t i = cur.beads.size(); i-- > 0;)
      if (meets(cur.beads[i], removed)) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  std::ptrdiff_t j = last_meeting();
  if (j < 0) return w;
  while (static_cast<std::size_t>(j) + 1 == cur.beads.size()) {
    if (!cur.extender) fail(ErrorKind::kDepthExhausted, "the removed set meets the last available bead");
    steps.charge();
    cur.beads.push_back(cur.extender(cur.beads.size()));
    j = last_meeting();
  }

  const Window view = inst.view(union_of(cur.beads), 0);
  const Connectoid& k = view.connectoid;
  IdSet cut = k.empty_set();
  for (const auto& e : removed)
    if (auto id = view.find(e)) cut.set(*id);

  std::vector<Names> kept(cur.beads.begin() + j + 1, cur.beads.end());
  IdSet front = ids_in(view, kept.front());
  std::size_t pieces = 0;
  for (std::ptrdiff_t i = j; i >= 0; --i) {
    const IdSet bead = ids_in(view, cur.beads[static_cast<std::size_t>(i)]);
    const IdSet allowed = bead - cut;
    const IdSet contact = (bead & front) - cut;
    if (contact.none()) break;
    const IdSet piece = k.component_within(first_of(contact), allowed);
    if (piece.is_subset_of(front)) break;
    kept.insert(kept.begin(), k.names_of(piece));
    front = piece;
    ++pieces;
  }

  NecklaceWitness tail;
  tail.beads = std::move(kept);
  if (cur.extender) {
    const std::size_t shift = static_cast<std::size_t>(j) + 1;
    auto ext = cur.extender;
    tail.extender = [ext, shift, pieces](std::size_t q) { return ext(q - pieces + shift); };
  }
  auto check = verify_necklace_prefix(inst, tail);
  if (!check.valid) fail(ErrorKind::kConstructionFailed, "re-beaded tail is invalid: " + check.reason);
  return tail;
}

ConvergenceReport converges_to_bounded(const Instance& inst, const Names& y, bool complete,
                                       std::size_t depth, std::size_t budget) {
  ConvergenceReport report;
  if (complete || inst.is_finite() || depth == 0) return report;
  const Window w = inst.view({inst.origin()}, 2 * depth, budget);
  IdSet late = w.connectoid.empty_set();
  for (const auto& e : y) {
    if (!inst.contains(e)) fail(ErrorKind::kMalformedInput, "sequence element '" + e + "' is unknown");
    if (auto id = w.find(e); id && w.distance[*id] > depth) late.set(*id);
  }
  for (std::size_t r = 0; r < depth; ++r) {
    const IdSet sep = w.ball(r);
    std::vector<IdSet> hit;
    for (const auto& cell : w.connectoid.components(sep))
      if (cell.intersects(late)) hit.push_back(cell);
    if (hit.size() >= 2) {
      report.converges = false;
      report.separator = w.connectoid.names_of(sep);
      report.first_cell = w.connectoid.names_of(hit[0]);
      report.second_cell = w.connectoid.names_of(hit[1]);
      return report;
    }
  }
  return report;
}

std::vector<EndShadow> end_shadows(const Instance& inst, const Names& x, std::size_t depth, std::size_t budget) {
  const Window w = inst.view({inst.origin()}, depth, budget);
  for (const auto& e : x) {
    if (!inst.contains(e)) fail(ErrorKind::kMalformedInput, "unknown element '" + e + "'");
    if (!w.find(e)) fail(ErrorKind::kDepthExhausted, "separator element '" + e + "' lies beyond the depth");
  }
  const IdSet sep = ids_in(w, x);
  std::vector<EndShadow> out;
  for (const auto& cell : w.connectoid.components(sep)) {
    if (!cell.intersects(w.frontier)) continue;
    EndShadow shadow;
    shadow.separator = w.connectoid.names_of(sep);
    shadow.cell = w.connectoid.names_of(cell);
    shadow.boundary = w.connectoid.names_of(cell & w.frontier);
    shadow.depth = depth;
    out.push_back(std::move(shadow));
  }
  return out;
}

namespace {

/// The union of the prefix beads after the last bead meeting x, with the
/// prefix extended until at least `late` such beads exist.
Names tail_evidence(const NecklaceWitness& w, const std::set<std::string>& x, std::size_t late,
                    StepBudget& steps) {
  NecklaceWitness cur = w;
  while (true) {
    std::size_t start = 0;
    for (std::size_t i = cur.beads.size(); i-- > 0;) {
      if (meets(cur.beads[i], x)) {
        start = i + 1;
        break;
      }
    }
    if (cur.beads.size() - start >= late || !cur.extender) {
      if (start == cur.beads.size()) fail(ErrorKind::kDepthExhausted, "no bead of the prefix avoids the separator");
      return union_of({cur.beads.begin() + static_cast<std::ptrdiff_t>(start), cur.beads.end()});
    }
    steps.charge();
    cur.beads.push_back(cur.extender(cur.beads.size()));
  }
}

}  // namespace

SameEndReport same_end_bounded(const Instance& inst, const NecklaceWitness& w1, const NecklaceWitness& w2,
                               std::size_t depth, std::size_t budget) {
  StepBudget steps(budget, ErrorKind::kDepthExhausted);
  SameEndReport report;
  const Window around = inst.view({inst.origin()}, depth, budget);
  for (std::size_t r = 0; r < depth; ++r) {
    const Names sep = around.connectoid.names_of(around.ball(r));
    const std::set<std::string> x(sep.begin(), sep.end());
    const Names t1 = tail_evidence(w1, x, depth + 2, steps);
    const Names t2 = tail_evidence(w2, x, depth + 2, steps);
    Names seeds = sep;
    seeds.push_back(inst.origin());
    seeds.insert(seeds.end(), t1.begin(), t1.end());
    seeds.insert(seeds.end(), t2.begin(), t2.end());
    const Window w = inst.view(seeds, depth, budget);
    const IdSet cut = ids_in(w, sep);
    const IdSet cell = w.connectoid.component_of(w.id(t1.front()), cut);
    if (!ids_in(w, t2).is_subset_of(cell)) {
      report.distinguished = true;
      report.separator = sep;
      return report;
    }
  }
  return report;
}

TargetSet named_targets(std::string_view spec) {
  auto numeric_parity = [](std::string_view n) -> std::optional<bool> {
    // integers: parity of the value; grid "(i,j)": parity of i+j;
    // binary-tree "r...": parity of the length below the root
    if (n.empty()) return std::nullopt;
    if (n.front() == 'r') return (n.size() - 1) % 2 == 0;
    long long total = 0;
    bool any = false;
    long long current = 0;
    bool negative = false;
    auto flush = [&]() {
      if (any) total += negative ? -current : current;
      current = 0;
      any = false;
      negative = false;
    };
    for (char c : n) {
      if (c >= '0' && c <= '9') {
        current = current * 10 + (c - '0');
        any = true;
      } else if (c == '-') {
        negative = true;
      } else {
        flush();
      }
    }
    flush();
    return total % 2 == 0;
  };
  TargetSet t;
  if (spec == "all") {
    t.contains = [](std::string_view) { return true; };
  } else if (spec == "even" || spec == "odd") {
    const bool want_even = spec == "even";
    t.contains = [numeric_parity, want_even](std::string_view n) {
      auto even = numeric_parity(n);
      return even && *even == want_even;
    };
  } else if (spec.starts_with("list:")) {
    Names members;
    std::string_view rest = spec.substr(5);
    while (!rest.empty()) {
      auto comma = rest.find(';');
      if (comma == std::string_view::npos) {
        members.emplace_back(rest);
        break;
      }
      members.emplace_back(rest.substr(0, comma));
      rest = rest.substr(comma + 1);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto shared = std::make_shared<std::set<std::string>>(members.begin(), members.end());
    t.contains = [shared](std::string_view n) { return shared->contains(std::string(n)); };
    t.members = std::move(members);
  } else if (spec.starts_with("column:")) {
    const std::string prefix = "(" + std::string(spec.substr(7)) + ",";
    t.contains = [prefix](std::string_view n) { return n.starts_with(prefix); };
  } else {
    fail(ErrorKind::kMalformedInput, "unknown target set '" + std::string(spec) + "'");
  }
  return t;
}

namespace {

struct BeadSearch {
  const Window& w;
  const IdSet& targets;
  std::size_t hits;
  StepBudget& steps;
  std::vector<IdSet> beads;
  std::size_t branching = 3;

  std::size_t covered() const {
    IdSet all = w.connectoid.empty_set();
    for (const auto& b : beads) all |= b;
    return (all & targets).count();
  }

  IdSet blocked_before(std::size_t count) const {
    IdSet out = w.connectoid.empty_set();
    for (std::size_t i = 0; i < count; ++i) out |= beads[i];
    return out;
  }

  /// Candidate next beads from `from`, nearest unused targets first.
  std::vector<IdSet> next_beads(Id from) {
    const Connectoid& k = w.connectoid;
    const std::size_t m = beads.size();
    IdSet allowed = k.ground() - blocked_before(m >= 1 ? m - 1 : 0);
    IdSet fresh = targets - blocked_before(m);
    fresh &= allowed;
    fresh.reset(from);
    std::vector<IdSet> out;
    IdSet remaining = fresh;
    while (out.size() < branching && remaining.any()) {
      steps.charge();
      auto link = k.connecting_set(from, remaining, allowed);
      if (!link) break;
      const Id reached = first_of(*link & remaining);
      remaining.reset(reached);
      out.push_back(*link);
    }
    return out;
  }

  bool search(Id end) {
    if (covered() >= hits) return finish(end);
    for (auto& bead : next_beads(end)) {
      const IdSet previous = blocked_before(beads.size());
      const Id reached = first_of((bead & targets) - previous - singleton(w.connectoid.universe(), end));
      if (reached == kNoId) continue;
      beads.push_back(bead);
      if (search(reached)) return true;
      beads.pop_back();
    }
    return false;
  }

  bool finish(Id end) {
    if (beads.back().intersects(w.frontier)) return true;
    const Connectoid& k = w.connectoid;
    IdSet allowed = k.ground() - blocked_before(beads.size() - 1);
    auto last = k.connecting_set(end, w.frontier, allowed);
    if (!last) return false;
    beads.push_back(*last);
    return true;
  }
};

}  // namespace

ProbeResult dispersedness_probe(const Instance& inst, const TargetSet& targets, std::size_t hits,
                                std::size_t budget) {
  ProbeResult result;
  if (inst.is_finite()) return result;
  if (targets.members && targets.members->size() < hits) return result;
  if (hits == 0) hits = 1;
  StepBudget steps(budget);
  for (std::size_t radius = 2 * hits + 2;; radius *= 2) {
    steps.charge(radius);
    const std::size_t remaining = steps.limit() - steps.used();
    const Window w = inst.view({inst.origin()}, radius, remaining);
    IdSet wanted = w.connectoid.empty_set();
    for (Id i = 0; i < w.connectoid.universe(); ++i)
      if (targets.contains(w.connectoid.name(i))) wanted.set(i);
    std::size_t starts = 0;
    for (Id s : w.by_rank()) {
      if (!wanted.test(s) || w.frontier.test(s)) continue;
      if (++starts > 4) break;
      BeadSearch search{w, wanted, hits, steps, {}};
      search.beads.push_back(singleton(w.connectoid.universe(), s));
      if (!search.search(s)) continue;
      NecklaceWitness witness;
      for (const auto& b : search.beads) witness.beads.push_back(w.connectoid.names_of(b));
      if (!verify_necklace_prefix(inst, witness).valid) continue;
      result.counterexample = true;
      result.hits = search.covered();
      result.radius = radius;
      result.witness = std::move(witness);
      return result;
    }
  }
}

std::optional<NecklaceWitness> ray_necklace(const Window& w, const RootedTree& t, const std::vector<Id>& path) {
  const Connectoid& k = w.connectoid;
  if (path.empty()) return std::nullopt;
  std::vector<IdSet> beads{singleton(k.universe(), path.front())};
  IdSet used = beads.front();
  std::size_t at = 0;
  while (at + 1 < path.size()) {
    std::size_t next = at + 1;
    while (next + 1 < path.size() && component_above(k, t, path[next]).intersects(used)) ++next;
    IdSet segment = k.empty_set();
    for (std::size_t i = at; i <= next; ++i) segment.set(path[i]);
    try {
      beads.push_back(connected_closure(k, component_above(k, t, path[at]), segment));
    } catch (const Error&) {
      return std::nullopt;
    }
    used |= beads.back();
    at = next;
  }
  NecklaceWitness out;
  for (const auto& b : beads) out.beads.push_back(k.names_of(b));
  return out;
}

NormalReport is_normal_bounded(const Instance& inst, const std::string& root,
                               const std::vector<std::pair<std::string, std::string>>& child_parent,
                               std::size_t depth, std::size_t budget) {
  Names nodes{root};
  for (const auto& [c, p] : child_parent) nodes.push_back(c);
  const Window w = inst.view(nodes, inst.is_finite() ? 0 : depth, budget);
  std::vector<std::pair<Id, Id>> pairs;
  for (const auto& [c, p] : child_parent) pairs.emplace_back(w.id(c), w.id(p));
  const RootedTree t = RootedTree::from_parents(w.connectoid.universe(), w.id(root), pairs);

  NormalReport report;
  if (!is_weak_normal(w.connectoid, t).weak_normal) {
    report.verdict = NormalVerdict::kNotWeakNormal;
    return report;
  }
  if (inst.is_finite() || depth == 0) return report;
  for (Id v : t.bfs_order()) {
    if (t.depth(v) + 1 != depth) continue;
    const auto path = t.path_to(v);
    Names ray;
    for (Id p : path) ray.push_back(w.connectoid.name(p));
    auto witness = ray_necklace(w, t, path);
    if (!witness || !verify_necklace_prefix(inst, *witness).valid) {
      report.verdict = NormalVerdict::kWitnessMissing;
      report.missing = ray;
      return report;
    }
    report.rays.push_back(std::move(ray));
    report.witnesses.push_back(std::move(*witness));
  }
  return report;
}

PresentedLayeredTree layered_normal_tree_presented(const std::shared_ptr<const PresentedConnectoid>& source,
                                                   const std::string& root, std::size_t rounds, std::size_t radius,
                                                   LayeredTreeOptions options) {
  if (rounds == 0) fail(ErrorKind::kMalformedInput, "at least one round is needed");
  options.rounds = rounds;
  StepBudget steps(options.budget, ErrorKind::kDepthExhausted);
  for (std::size_t r = radius ? radius : 2 * rounds;; r *= 2) {
    steps.charge(r);
    Window w = explore(source, {root}, r, options.budget);
    std::vector<IdSet> layers;
    for (Id i : w.by_rank()) layers.push_back(singleton(w.connectoid.universe(), i));
    LayeredTreeResult res = layered_normal_tree(w.connectoid, layers, w.id(root), options);
    IdSet used = res.tree.nodes();
    for (const auto& th : res.state.theta) used |= th;
    std::size_t reach = 0;
    for_each_id(used, [&](Id i) { reach = std::max(reach, w.distance[i]); });
    if (reach + 2 <= r) return {std::move(w), std::move(res)};
  }
}

AdhesionProbe bounded_adhesion(const Instance& inst, const TargetSet& base, const std::string& probe,
                               std::size_t bound, std::size_t radius, std::size_t budget) {
  const Window w = inst.view({inst.origin(), probe}, radius, budget);
  const Connectoid& k = w.connectoid;
  IdSet b = k.empty_set();
  for_each_id(k.ground(), [&](Id e) {
    if (base.contains(k.name(e))) b.set(e);
  });
  const Id p = w.id(probe);
  if (b.test(p)) fail(ErrorKind::kPreconditionViolated, "probe element lies in the base");
  const IdSet comp = k.component_of(p, b);
  AdhesionProbe out;
  out.component = k.names_of(comp);
  StepBudget steps(budget);
  for_each_subset_up_to(k.universe(), to_ids(b), bound, [&](const IdSet& x) {
    steps.charge();
    if (k.component_of(p, x) != comp) return true;
    out.separator = k.names_of(x);
    return false;
  });
  return out;
}

}  // namespace connectoid
