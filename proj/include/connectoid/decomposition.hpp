#pragma once

#include <memory>
#include <string>
#include <vector>

#include "connectoid/connectoid.hpp"
#include "connectoid/layered_tree.hpp"
#include "connectoid/rooted_tree.hpp"

namespace connectoid {

/// A rooted tree over bag ids with a part β(t) per bag and a separator
/// γ(e) per edge. The edge from parent(t) to t is stored at index t.
struct TreeDecomposition {
  std::shared_ptr<const ElementNames> bags;
  RootedTree tree;
  std::vector<IdSet> beta;
  std::vector<IdSet> gamma;  // empty for the root bag

  const std::string& bag_name(Id b) const { return (*bags)[b]; }
};

enum class TdViolationKind { kNone, kNotPartition, kNotComponent, kInfinitePart };

struct TdReport {
  bool valid = true;
  TdViolationKind kind = TdViolationKind::kNone;
  Id bag = kNoId;      // offending bag (for edges: the child end)
  IdSet elements;      // overlapping or missing elements, or the up-union
};

TdReport validate_td(const Connectoid& k, const TreeDecomposition& td);

/// β(v) = {v}, γ(uv) = down-set of u. PreconditionViolated unless t is a
/// weak normal spanning tree.
TreeDecomposition nst_to_td(const Connectoid& k, const RootedTree& t);

/// Distance classes of the decomposition tree: S_n is the union of the
/// parts of bags at depth n.
std::vector<IdSet> td_layers(const Connectoid& k, const TreeDecomposition& td);

/// Feeds the distance-class layers to the layered recursion, rooted at the
/// least element of the root part.
RootedTree td_to_nst(const Connectoid& k, const TreeDecomposition& td, const LayeredTreeOptions& options = {});

}  // namespace connectoid
