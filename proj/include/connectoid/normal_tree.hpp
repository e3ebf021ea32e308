#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "connectoid/connectoid.hpp"
#include "connectoid/rooted_tree.hpp"

namespace connectoid {

enum class NormalityClause {
  kNone,
  kIncomparable,    // incomparable u, v share a connected set avoiding their common down-set
  kComparable,      // u < v cannot be joined avoiding the strict down-set of u
  kComponentAbove,  // K_t ∩ V(T) differs from the up-set of t
};

struct WeakNormalReport {
  bool weak_normal = true;
  NormalityClause clause = NormalityClause::kNone;
  Id first = kNoId;
  Id second = kNoId;
  /// Incomparable clause: a connected set containing both nodes and no
  /// common lower bound. Component clause: K_t.
  IdSet witness;
};

/// Checks the two clauses of the definition directly.
WeakNormalReport check_weak_normal_definition(const Connectoid& k, const RootedTree& t);
/// Checks K_t ∩ V(T) = up-set of t for every node t.
WeakNormalReport check_weak_normal_components(const Connectoid& k, const RootedTree& t);
/// Runs both checks; a disagreement is an internal error (std::logic_error).
/// Returns the definition report.
WeakNormalReport is_weak_normal(const Connectoid& k, const RootedTree& t);

/// K_v: the component of ground \ strict-down-set(v) containing v.
IdSet component_above(const Connectoid& k, const RootedTree& t, Id v);

/// N_K = {v : K_v ⊇ comp} for a component comp of ground \ V(T). Throws
/// NoSuchComponent if comp is not such a component, PreconditionViolated if
/// the result is not a down-closed chain separating comp.
IdSet neighbourhood_of(const Connectoid& k, const RootedTree& t, const IdSet& comp);

/// The ≤_T-maximal element of a chain of nodes.
Id chain_maximum(const RootedTree& t, const IdSet& chain);

/// Smallest X ⊆ base (canonical order) with |X| <= bound such that comp is
/// a component of ground \ X. When none is found within the bound the base
/// itself is returned if it qualifies; nullopt otherwise.
std::optional<IdSet> adhesion_witness(const Connectoid& k, const IdSet& comp, const IdSet& base,
                                      std::size_t bound, std::size_t budget = kDefaultBudget);

/// A finite weak normal tree rooted at s with node set exactly x ∪ {s}.
/// Every element of x must lie in the component of s.
RootedTree finite_normal_tree(const Connectoid& k, Id s, const IdSet& x);

/// Attaches each subtree T_K (a weak normal tree of the induced
/// subconnectoid on the component K of ground \ V(t)) below the maximal
/// element of N_K. The result is verified before it is returned.
RootedTree extend_normal_tree(const Connectoid& k, const RootedTree& t,
                              const std::vector<std::pair<IdSet, RootedTree>>& subtrees);

}  // namespace connectoid
