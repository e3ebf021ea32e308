#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "connectoid/id_set.hpp"

namespace connectoid {

/// A rooted tree whose nodes are ids of some universe (ground elements of a
/// connectoid, or bag ids of a decomposition). Stored as a parent map.
class RootedTree {
 public:
  RootedTree() = default;
  /// A single-node tree.
  RootedTree(std::size_t universe, Id root);

  /// Builds a tree from (child, parent) pairs. Throws MalformedInput on
  /// cycles, unknown parents, duplicate children or nodes not reaching root.
  static RootedTree from_parents(std::size_t universe, Id root,
                                 const std::vector<std::pair<Id, Id>>& child_parent);

  std::size_t universe() const noexcept { return parent_.size(); }
  bool empty() const noexcept { return root_ == kNoId; }
  Id root() const noexcept { return root_; }
  const IdSet& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.count(); }
  bool contains(Id v) const { return v < parent_.size() && nodes_.test(v); }
  /// kNoId for the root.
  Id parent(Id v) const { return parent_[v]; }

  /// Adds `child` (not yet a node) below the node `parent`.
  void attach(Id child, Id parent);

  std::size_t depth(Id v) const;
  /// Root-to-v path, root first.
  std::vector<Id> path_to(Id v) const;
  IdSet down(Id v) const;
  IdSet strict_down(Id v) const;
  IdSet up(Id v) const;
  IdSet strict_up(Id v) const;
  bool leq(Id u, Id v) const;
  bool comparable(Id u, Id v) const { return leq(u, v) || leq(v, u); }
  /// Greatest common lower bound.
  Id meet(Id u, Id v) const;
  std::vector<Id> children(Id v) const;
  /// Breadth-first order, children visited by increasing id.
  std::vector<Id> bfs_order() const;
  std::vector<std::pair<Id, Id>> edges() const;  // (parent, child), bfs order
  std::size_t height() const;

  bool operator==(const RootedTree& other) const = default;

 private:
  Id root_ = kNoId;
  IdSet nodes_;
  std::vector<Id> parent_;
};

}  // namespace connectoid
