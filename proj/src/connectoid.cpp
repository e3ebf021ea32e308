#include "connectoid/connectoid.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace connectoid {

namespace {

std::vector<std::string> sorted_unique_names(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    auto dup = std::adjacent_find(names.begin(), names.end());
    fail(ErrorKind::kMalformedInput, "duplicate element id '" + *dup + "'");
  }
  return names;
}

void normalize_generators(std::vector<IdSet>& gens, const IdSet& ground) {
  std::vector<std::pair<std::vector<Id>, std::size_t>> keyed;
  keyed.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Id> ids = to_ids(gens[i]);
    if (ids.size() < 2 || !std::all_of(ids.begin(), ids.end(), [&](Id e) { return ground.test(e); })) continue;
    keyed.emplace_back(std::move(ids), i);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<IdSet> out;
  out.reserve(keyed.size());
  for (auto& [ids, i] : keyed) out.push_back(std::move(gens[i]));
  gens = std::move(out);
}

}  // namespace

// ---------------------------------------------------------------------------

ElementNames::ElementNames(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (Id i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

std::optional<Id> ElementNames::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

Connectoid Connectoid::from_bonds(std::vector<std::string> ground,
                                  const std::vector<std::vector<std::string>>& bonds) {
  auto names = std::make_shared<const ElementNames>(sorted_unique_names(std::move(ground)));
  IdSet all(names->size());
  all.set();
  std::vector<IdSet> gens;
  gens.reserve(bonds.size());
  for (const auto& bond : bonds) {
    IdSet g(names->size());
    for (const auto& n : bond) {
      auto id = names->find(n);
      if (!id) fail(ErrorKind::kMalformedInput, "bond mentions unknown element '" + n + "'");
      g.set(*id);
    }
    gens.push_back(std::move(g));
  }
  return from_generators(std::move(names), std::move(all), std::move(gens));
}

Connectoid Connectoid::from_family(const FiniteFamily& family) {
  Connectoid k = from_bonds(family.ground, family.members);
  k.exact_ = family;
  return k;
}

Connectoid Connectoid::from_generators(std::shared_ptr<const ElementNames> names, IdSet ground,
                                       std::vector<IdSet> generators) {
  Connectoid k;
  k.names_ = std::move(names);
  k.ground_ = std::move(ground);
  normalize_generators(generators, k.ground_);
  k.generators_ = std::move(generators);
  k.index_generators();
  return k;
}

Connectoid Connectoid::from_predicate(std::vector<std::string> names,
                                      const std::function<bool(std::uint64_t)>& is_connected,
                                      std::size_t max_elements) {
  if (!std::is_sorted(names.begin(), names.end()) ||
      std::adjacent_find(names.begin(), names.end()) != names.end()) {
    fail(ErrorKind::kMalformedInput, "predicate construction needs sorted, unique names");
  }
  const std::size_t n = names.size();
  if (n > max_elements || n > 20) {
    fail(ErrorKind::kUnsupportedSize,
         "exhaustive construction over " + std::to_string(n) + " elements exceeds limit of " +
             std::to_string(std::min<std::size_t>(max_elements, 20)));
  }
  std::vector<std::uint64_t> gens;
  for (std::size_t size = 2; size <= n; ++size) {
    // Gosper's hack over masks with `size` bits.
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      if (is_connected(mask)) {
        std::uint64_t reach = mask & (~mask + 1);
        bool grew = true;
        while (grew) {
          grew = false;
          for (auto g : gens) {
            if ((g & ~mask) == 0 && (g & reach) && (g & ~reach)) {
              reach |= g;
              grew = true;
            }
          }
        }
        if (reach != mask) gens.push_back(mask);
      }
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  auto shared = std::make_shared<const ElementNames>(std::move(names));
  IdSet all(n);
  all.set();
  std::vector<IdSet> sets;
  sets.reserve(gens.size());
  for (auto g : gens) {
    IdSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (g >> i & 1) s.set(i);
    sets.push_back(std::move(s));
  }
  return from_generators(std::move(shared), std::move(all), std::move(sets));
}

void Connectoid::index_generators() {
  incident_.assign(universe(), {});
  members_.assign(generators_.size(), {});
  for (std::uint32_t gi = 0; gi < generators_.size(); ++gi) {
    members_[gi] = to_ids(generators_[gi]);
    for (Id id : members_[gi]) incident_[id].push_back(gi);
  }
}

std::optional<Id> Connectoid::find(std::string_view name) const {
  if (!names_) return std::nullopt;
  auto id = names_->find(name);
  if (!id || !ground_.test(*id)) return std::nullopt;
  return id;
}

Id Connectoid::id(std::string_view name) const {
  auto id = find(name);
  if (!id) fail(ErrorKind::kMalformedInput, "unknown element '" + std::string(name) + "'");
  return *id;
}

IdSet Connectoid::set_of(const std::vector<std::string>& names) const {
  IdSet s = empty_set();
  for (const auto& n : names) s.set(id(n));
  return s;
}

std::vector<std::string> Connectoid::names_of(const IdSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.count());
  for_each_id(s, [&](Id i) { out.push_back(name(i)); });
  return out;
}

bool Connectoid::is_connected(const IdSet& c) const {
  if (!c.is_subset_of(ground_)) fail(ErrorKind::kMalformedInput, "set is not inside the ground set");
  if (c.count() <= 1) return true;
  return component_within(first_of(c), c) == c;
}

IdSet Connectoid::component_within(Id x, const IdSet& allowed) const {
  IdSet reached(universe());
  if (x >= universe() || !allowed.test(x) || !ground_.test(x)) return reached;
  std::vector<Id> stack{x};
  reached.set(x);
  while (!stack.empty()) {
    const Id e = stack.back();
    stack.pop_back();
    for (auto gi : incident_[e]) {
      const auto& g = members_[gi];
      if (!std::all_of(g.begin(), g.end(), [&](Id y) { return allowed.test(y); })) continue;
      for (Id y : g) {
        if (!reached.test(y)) {
          reached.set(y);
          stack.push_back(y);
        }
      }
    }
  }
  return reached;
}

IdSet Connectoid::component_of(Id x, const IdSet& removed) const {
  IdSet allowed = ground_;
  allowed -= removed;
  return component_within(x, allowed);
}

std::vector<IdSet> Connectoid::components(const IdSet& removed) const {
  if (!removed.is_subset_of(ground_)) {
    fail(ErrorKind::kMalformedInput, "removed set is not inside the ground set");
  }
  IdSet remaining = ground_;
  remaining -= removed;
  const IdSet allowed = remaining;
  std::vector<IdSet> out;
  for (auto i = remaining.find_first(); i != IdSet::npos; i = remaining.find_next(i)) {
    IdSet comp = component_within(static_cast<Id>(i), allowed);
    remaining -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool Connectoid::is_component(const IdSet& cell, const IdSet& removed) const {
  if (cell.none() || cell.intersects(removed) || !cell.is_subset_of(ground_)) return false;
  return component_of(first_of(cell), removed) == cell;
}

std::optional<IdSet> Connectoid::connecting_set(Id from, const IdSet& targets,
                                                const IdSet& allowed) const {
  if (!allowed.test(from) || !ground_.test(from)) return std::nullopt;
  if (targets.test(from)) return singleton(universe(), from);
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> via(universe(), kUnset);   // generator that reached the element
  std::vector<Id> prev(universe(), kNoId);              // element it was reached from
  std::vector<char> used(generators_.size(), 0);
  std::deque<Id> queue{from};
  IdSet reached(universe());
  reached.set(from);
  while (!queue.empty()) {
    const Id e = queue.front();
    queue.pop_front();
    for (auto gi : incident_[e]) {
      if (used[gi]) continue;
      used[gi] = 1;
      const auto& g = members_[gi];
      if (!std::all_of(g.begin(), g.end(), [&](Id y) { return allowed.test(y); })) continue;
      for (Id y : g) {
        if (reached.test(y)) continue;
        reached.set(y);
        via[y] = gi;
        prev[y] = e;
        if (targets.test(y)) {
          IdSet out = singleton(universe(), from);
          for (Id cur = y; cur != from; cur = prev[cur]) out |= generators_[via[cur]];
          return out;
        }
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

Connectoid Connectoid::induced(const IdSet& sub) const {
  Connectoid k;
  k.names_ = names_;
  k.ground_ = ground_ & sub;
  k.generators_.reserve(generators_.size());
  for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
    const auto& g = members_[gi];
    if (std::all_of(g.begin(), g.end(), [&](Id y) { return k.ground_.test(y); })) k.generators_.push_back(generators_[gi]);
  }
  k.index_generators();
  if (exact_) {
    FiniteFamily f;
    f.ground = names_of(k.ground_);
    for (const auto& m : exact_->members) {
      bool inside = std::all_of(m.begin(), m.end(), [&](const std::string& n) {
        auto id = names_->find(n);
        return id && k.ground_.test(*id);
      });
      if (inside) f.members.push_back(m);
    }
    k.exact_ = std::move(f);
  }
  return k;
}

// ---------------------------------------------------------------------------

FamilyReport validate_family(const FiniteFamily& family) {
  const auto names = std::make_shared<const ElementNames>(sorted_unique_names(family.ground));
  const std::size_t n = names->size();
  std::vector<IdSet> members;
  members.reserve(family.members.size());
  for (const auto& m : family.members) {
    IdSet s(n);
    for (const auto& e : m) {
      auto id = names->find(e);
      if (!id) fail(ErrorKind::kMalformedInput, "member mentions unknown element '" + e + "'");
      s.set(*id);
    }
    members.push_back(std::move(s));
  }
  std::sort(members.begin(), members.end(), CanonicalLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::unordered_set<IdSet, IdSetHash> present(members.begin(), members.end());

  auto to_names = [&](const IdSet& s) {
    std::vector<std::string> out;
    for_each_id(s, [&](Id i) { out.push_back((*names)[i]); });
    return out;
  };

  FamilyReport report;
  if (!present.contains(IdSet(n))) {
    report.violations.push_back({FamilyViolationKind::kMissingEmpty, {}, {}, {}});
  }
  for (Id i = 0; i < n; ++i) {
    if (!present.contains(singleton(n, i))) {
      report.violations.push_back(
          {FamilyViolationKind::kMissingSingleton, {(*names)[i]}, {}, {(*names)[i]}});
    }
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!members[a].intersects(members[b])) continue;
      IdSet u = members[a] | members[b];
      if (!present.contains(u)) {
        report.violations.push_back({FamilyViolationKind::kMissingUnion, to_names(members[a]),
                                     to_names(members[b]), to_names(u)});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<IdSet> grow_connected(const Connectoid& k, std::vector<IdSet> seeds,
                                  const IdSet& allowed, std::size_t max_size, StepBudget& budget) {
  std::unordered_set<IdSet, IdSetHash> seen(seeds.begin(), seeds.end());
  std::vector<IdSet> frontier = seeds;
  while (!frontier.empty()) {
    std::vector<IdSet> next;
    for (const auto& z : frontier) {
      std::set<std::uint32_t> candidates;
      for_each_id(z, [&](Id e) {
        for (auto gi : k.generators_at(e)) candidates.insert(gi);
      });
      for (auto gi : candidates) {
        const IdSet& g = k.generators()[gi];
        if (g.is_subset_of(z) || !g.is_subset_of(allowed)) continue;
        IdSet u = z | g;
        if (u.count() > max_size) continue;
        budget.charge();
        if (seen.insert(u).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  std::vector<IdSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

std::vector<IdSet> enumerate_connected_sets(const Connectoid& k, std::size_t budget) {
  StepBudget steps(budget);
  std::vector<IdSet> seeds;
  for_each_id(k.ground(), [&](Id i) { seeds.push_back(singleton(k.universe(), i)); });
  auto out = grow_connected(k, std::move(seeds), k.ground(), k.universe(), steps);
  out.insert(out.begin(), k.empty_set());
  return out;
}

std::vector<IdSet> connected_sets_containing(const Connectoid& k, Id seed, const IdSet& allowed,
                                             std::size_t max_size, StepBudget& budget) {
  if (!allowed.test(seed) || !k.ground().test(seed) || max_size == 0) return {};
  return grow_connected(k, {singleton(k.universe(), seed)}, allowed, max_size, budget);
}

IdSet connected_closure(const Connectoid& k, const IdSet& c, const IdSet& x) {
  if (!x.is_subset_of(c)) fail(ErrorKind::kMalformedInput, "closure targets leave the connected set");
  if (!k.is_connected(c)) fail(ErrorKind::kNotConnected, "closure host set is not connected");
  IdSet out = k.empty_set();
  if (x.none()) return out;
  const Id anchor = first_of(x);
  out.set(anchor);
  for_each_id(x, [&](Id y) {
    if (out.test(y)) return;
    out |= *k.connecting_set(anchor, singleton(k.universe(), y), c);
  });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_partition(const Connectoid& k, const std::vector<IdSet>& parts) {
  IdSet covered = k.empty_set();
  for (const auto& p : parts) {
    if (p.size() != k.universe()) fail(ErrorKind::kMalformedInput, "part has wrong universe");
    if (p.none()) fail(ErrorKind::kMalformedInput, "empty part in partition");
    if (!p.is_subset_of(k.ground())) fail(ErrorKind::kMalformedInput, "part leaves the ground set");
    if (p.intersects(covered)) fail(ErrorKind::kMalformedInput, "parts overlap");
    covered |= p;
  }
  if (covered != k.ground()) fail(ErrorKind::kMalformedInput, "parts do not cover the ground set");
}

struct PartOrder {
  std::vector<std::string> names;     // sorted part names
  std::vector<std::size_t> position;  // input index -> sorted index
};

PartOrder order_parts(const Connectoid& k, const std::vector<IdSet>& parts) {
  std::vector<std::pair<std::string, std::size_t>> named;
  for (std::size_t i = 0; i < parts.size(); ++i) named.emplace_back(part_name(k, parts[i]), i);
  std::sort(named.begin(), named.end());
  PartOrder order;
  order.position.resize(parts.size());
  for (std::size_t j = 0; j < named.size(); ++j) {
    order.names.push_back(named[j].first);
    order.position[named[j].second] = j;
  }
  return order;
}

}  // namespace

Id Quotient::part_of(Id x) const {
  for (Id i = 0; i < parts.size(); ++i)
    if (parts[i].test(x)) return i;
  return kNoId;
}

std::string part_name(const Connectoid& k, const IdSet& part) {
  std::string out;
  for_each_id(part, [&](Id i) {
    if (!out.empty()) out += '+';
    out += k.name(i);
  });
  return out;
}

Quotient contract(const Connectoid& k, const std::vector<IdSet>& parts) {
  require_partition(k, parts);
  for (const auto& p : parts) {
    if (!k.is_connected(p)) {
      fail(ErrorKind::kNotConnected, "part {" + part_name(k, p) + "} is not connected");
    }
  }
  const PartOrder order = order_parts(k, parts);
  const std::size_t m = parts.size();
  std::vector<Id> owner(k.universe(), kNoId);
  Quotient q;
  q.parts.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    q.parts[order.position[i]] = parts[i];
    for_each_id(parts[i], [&](Id e) { owner[e] = static_cast<Id>(order.position[i]); });
  }
  std::vector<IdSet> gens;
  for (const auto& g : k.generators()) {
    IdSet touched(m);
    for_each_id(g, [&](Id e) { touched.set(owner[e]); });
    gens.push_back(std::move(touched));
  }
  IdSet all(m);
  all.set();
  q.connectoid = Connectoid::from_generators(std::make_shared<const ElementNames>(order.names),
                                             std::move(all), std::move(gens));
  return q;
}

Connectoid torso(const Connectoid& k, const IdSet& sub) {
  if (!sub.is_subset_of(k.ground())) fail(ErrorKind::kMalformedInput, "torso set leaves the ground set");
  const std::vector<Id> members = to_ids(sub);
  auto predicate = [&](std::uint64_t mask) {
    IdSet y = k.empty_set();
    for (std::size_t i = 0; i < members.size(); ++i)
      if (mask >> i & 1) y.set(members[i]);
    IdSet removed = sub;
    removed -= y;
    return y.is_subset_of(k.component_of(first_of(y), removed));
  };
  return Connectoid::from_predicate(k.names_of(sub), predicate);
}

Quotient weak_contract(const Connectoid& k, const std::vector<IdSet>& parts,
                       const std::vector<Id>& reps) {
  require_partition(k, parts);
  if (reps.size() != parts.size()) {
    fail(ErrorKind::kMalformedInput, "need exactly one representative per part");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (reps[i] >= k.universe() || !parts[i].test(reps[i])) {
      fail(ErrorKind::kMalformedInput, "representative outside its part {" + part_name(k, parts[i]) + "}");
    }
  }
  const PartOrder order = order_parts(k, parts);
  Quotient q;
  q.parts.resize(parts.size());
  std::vector<Id> sorted_reps(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    q.parts[order.position[i]] = parts[i];
    sorted_reps[order.position[i]] = reps[i];
  }
  auto predicate = [&](std::uint64_t mask) {
    IdSet united = k.empty_set();
    IdSet wanted = k.empty_set();
    for (std::size_t i = 0; i < q.parts.size(); ++i) {
      if (mask >> i & 1) {
        united |= q.parts[i];
        wanted.set(sorted_reps[i]);
      }
    }
    return wanted.is_subset_of(k.component_within(first_of(wanted), united));
  };
  q.connectoid = Connectoid::from_predicate(order.names, predicate);
  return q;
}

// ---------------------------------------------------------------------------

bool check_link(const Connectoid& k, const Link& l) {
  const std::size_t n = k.universe();
  if (l.c1.size() != n || l.c2.size() != n || l.x.size() != n || l.y.size() != n) return false;
  if (l.x.none() || l.y.none() || l.x.intersects(l.y)) return false;
  if (!l.c1.is_subset_of(k.ground()) || !l.c2.is_subset_of(k.ground())) return false;
  if (!k.is_connected(l.c1) || !k.is_connected(l.c2)) return false;
  IdSet only1 = l.c1 - l.c2;
  IdSet only2 = l.c2 - l.c1;
  if (!l.x.is_subset_of(only1) || !l.y.is_subset_of(only2)) return false;
  if (!l.c1.intersects(l.c2)) return false;
  return k.is_connected(l.c1 | l.c2);
}

LinkEnumeration enumerate_links(const Connectoid& k, const IdSet& x, const IdSet& y,
                                std::size_t bound, std::size_t budget) {
  if (x.none() || y.none()) fail(ErrorKind::kMalformedInput, "link endpoints must be nonempty");
  if (x.intersects(y)) fail(ErrorKind::kMalformedInput, "link endpoints X and Y must be disjoint");
  if (!x.is_subset_of(k.ground()) || !y.is_subset_of(k.ground())) {
    fail(ErrorKind::kMalformedInput, "link endpoints leave the ground set");
  }
  StepBudget steps(budget);
  LinkEnumeration out;
  const std::size_t nx = x.count();
  const std::size_t ny = y.count();
  if (bound < nx + ny + 1) return out;

  auto sides = [&](const IdSet& must, const IdSet& avoid, std::size_t max_size) {
    IdSet allowed = k.ground() - avoid;
    auto sets = connected_sets_containing(k, first_of(must), allowed, max_size, steps);
    std::erase_if(sets, [&](const IdSet& s) { return !must.is_subset_of(s); });
    return sets;
  };
  const auto firsts = sides(x, y, bound - ny);
  const auto seconds = sides(y, x, bound - nx);
  for (const auto& c1 : firsts) {
    for (const auto& c2 : seconds) {
      steps.charge();
      if (!c1.intersects(c2)) continue;
      if ((c1 | c2).count() > bound) continue;
      out.links.push_back({c1, c2, x, y});
    }
  }
  std::stable_sort(out.links.begin(), out.links.end(), [](const Link& a, const Link& b) {
    IdSet sa = a.support();
    IdSet sb = b.support();
    if (sa != sb) return canonical_less(sa, sb);
    if (a.c1 != b.c1) return canonical_less(a.c1, b.c1);
    return canonical_less(a.c2, b.c2);
  });
  const IdSet ends = x | y;
  for (std::size_t i = 0; i < out.links.size(); ++i) {
    const IdSet support = out.links[i].support();
    bool disjoint = std::all_of(out.disjoint_family.begin(), out.disjoint_family.end(),
                                [&](std::size_t j) {
                                  return (support & out.links[j].support()).is_subset_of(ends);
                                });
    if (disjoint) out.disjoint_family.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

StrongSubsetReport is_strong_subset(const Connectoid& k, const IdSet& sub, std::size_t lambda,
                                    std::size_t budget) {
  if (!sub.is_subset_of(k.ground())) fail(ErrorKind::kMalformedInput, "subset leaves the ground set");
  StepBudget steps(budget);
  const auto all = enumerate_connected_sets(k, budget);
  std::vector<std::pair<IdSet, IdSet>> traces;  // (trace, first connected set with it)
  std::unordered_set<IdSet, IdSetHash> seen;
  for (const auto& c : all) {
    IdSet t = c & sub;
    if (t.none()) continue;
    if (seen.insert(t).second) traces.emplace_back(std::move(t), c);
  }
  const std::vector<Id> outside = to_ids(k.ground() - sub);
  StrongSubsetReport report;
  for (const auto& [trace, witness] : traces) {
    IdSet others = sub - trace;
    for_each_subset_up_to(k.universe(), outside, lambda, [&](const IdSet& x) {
      steps.charge();
      if (trace.is_subset_of(k.component_of(first_of(trace), x | others))) return true;
      report.strong = false;
      report.separator = x;
      report.connected = witness;
      return false;
    });
    if (!report.strong) break;
  }
  return report;
}

}  // namespace connectoid
