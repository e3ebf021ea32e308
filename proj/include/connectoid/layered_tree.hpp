#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "connectoid/connectoid.hpp"
#include "connectoid/rooted_tree.hpp"

namespace connectoid {

struct LayeredTreeOptions {
  /// Largest |X| and |Y| among the pairs {X, Y} whose links are registered.
  std::size_t link_set_size = 1;
  /// Largest link support searched when filling the registry.
  std::size_t link_bound = 4;
  /// Stop after this many rounds (T_1 is round 1); unbounded if empty.
  std::optional<std::size_t> rounds;
  std::size_t budget = kDefaultBudget;
};

/// Internally disjoint X–Y links found by bounded search, in discovery order.
struct RegisteredLinks {
  IdSet x;
  IdSet y;
  std::vector<IdSet> supports;
};

struct LayeredTreeState {
  /// T_1, T_2, ...: each a rooted subtree of the next, same root.
  std::vector<RootedTree> rounds;
  /// Θ(v) per id; empty for ids that are not tree nodes.
  std::vector<IdSet> theta;
  std::vector<RegisteredLinks> link_registry;
};

struct LayeredTreeResult {
  RootedTree tree;
  LayeredTreeState state;
};

/// The dispersed-layer recursion: round n+1 extends T_n into every
/// component of ground \ V(T_n) that meets a layer, rooted at an element of
/// the first layer it meets, through a finite normal tree containing
/// Θ(t_K) ∩ K. Requires k connected and root in the ground set.
LayeredTreeResult layered_normal_tree(const Connectoid& k, const std::vector<IdSet>& layers, Id root,
                                      const LayeredTreeOptions& options = {});

/// Singleton layers in canonical order.
LayeredTreeResult layered_normal_tree(const Connectoid& k, const IdSet& targets, Id root,
                                      const LayeredTreeOptions& options = {});

}  // namespace connectoid
