#include "connectoid/rooted_tree.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "connectoid/errors.hpp"

namespace connectoid {

RootedTree::RootedTree(std::size_t universe, Id root)
    : root_(root), nodes_(universe), parent_(universe, kNoId) {
  if (root >= universe) fail(ErrorKind::kMalformedInput, "root outside the universe");
  nodes_.set(root);
}

RootedTree RootedTree::from_parents(std::size_t universe, Id root,
                                    const std::vector<std::pair<Id, Id>>& child_parent) {
  RootedTree t(universe, root);
  std::vector<Id> parent(universe, kNoId);
  IdSet listed(universe);
  for (auto [c, p] : child_parent) {
    if (c >= universe || p >= universe) fail(ErrorKind::kMalformedInput, "tree node outside the universe");
    if (c == root) fail(ErrorKind::kMalformedInput, "the root cannot have a parent");
    if (listed.test(c)) fail(ErrorKind::kMalformedInput, "node listed with two parents");
    listed.set(c);
    parent[c] = p;
  }
  // attach in an order where parents come first
  std::vector<std::vector<Id>> kids(universe);
  for (auto [c, p] : child_parent) kids[p].push_back(c);
  std::deque<Id> queue{root};
  while (!queue.empty()) {
    Id v = queue.front();
    queue.pop_front();
    std::sort(kids[v].begin(), kids[v].end());
    for (Id c : kids[v]) {
      t.attach(c, v);
      queue.push_back(c);
    }
  }
  if (t.size() != child_parent.size() + 1) {
    fail(ErrorKind::kMalformedInput, "parent map has a cycle or a node not reaching the root");
  }
  return t;
}

void RootedTree::attach(Id child, Id parent) {
  if (child >= universe() || !contains(parent)) fail(ErrorKind::kMalformedInput, "attach below a non-node");
  if (nodes_.test(child)) fail(ErrorKind::kMalformedInput, "node already in the tree");
  nodes_.set(child);
  parent_[child] = parent;
}

std::size_t RootedTree::depth(Id v) const {
  std::size_t d = 0;
  for (Id p = parent_[v]; p != kNoId; p = parent_[p]) ++d;
  return d;
}

std::vector<Id> RootedTree::path_to(Id v) const {
  std::vector<Id> path;
  for (Id p = v; p != kNoId; p = parent_[p]) path.push_back(p);
  std::reverse(path.begin(), path.end());
  return path;
}

IdSet RootedTree::down(Id v) const {
  IdSet s(universe());
  for (Id p = v; p != kNoId; p = parent_[p]) s.set(p);
  return s;
}

IdSet RootedTree::strict_down(Id v) const {
  IdSet s = down(v);
  s.reset(v);
  return s;
}

bool RootedTree::leq(Id u, Id v) const {
  for (Id p = v; p != kNoId; p = parent_[p])
    if (p == u) return true;
  return false;
}

IdSet RootedTree::up(Id v) const {
  IdSet s(universe());
  for_each_id(nodes_, [&](Id w) {
    if (leq(v, w)) s.set(w);
  });
  return s;
}

IdSet RootedTree::strict_up(Id v) const {
  IdSet s = up(v);
  s.reset(v);
  return s;
}

Id RootedTree::meet(Id u, Id v) const {
  IdSet du = down(u);
  for (Id p = v; p != kNoId; p = parent_[p])
    if (du.test(p)) return p;
  return kNoId;
}

std::vector<Id> RootedTree::children(Id v) const {
  std::vector<Id> out;
  for_each_id(nodes_, [&](Id w) {
    if (parent_[w] == v) out.push_back(w);
  });
  return out;
}

std::vector<Id> RootedTree::bfs_order() const {
  std::vector<Id> order;
  if (empty()) return order;
  std::vector<std::vector<Id>> kids(universe());
  for_each_id(nodes_, [&](Id w) {
    if (parent_[w] != kNoId) kids[parent_[w]].push_back(w);
  });
  order.push_back(root_);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Id c : kids[order[i]]) order.push_back(c);
  return order;
}

std::vector<std::pair<Id, Id>> RootedTree::edges() const {
  std::vector<std::pair<Id, Id>> out;
  for (Id v : bfs_order())
    if (parent_[v] != kNoId) out.emplace_back(parent_[v], v);
  return out;
}

std::size_t RootedTree::height() const {
  std::size_t h = 0;
  for_each_id(nodes_, [&](Id v) { h = std::max(h, depth(v)); });
  return h;
}

}  // namespace connectoid
