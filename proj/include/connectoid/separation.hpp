#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "connectoid/connectoid.hpp"
#include "connectoid/presented.hpp"
#include "connectoid/rooted_tree.hpp"

namespace connectoid {

/// A well-order of the ground set given as a sequence, with optional
/// separators X_s indexed by element id.
struct WellOrderWitness {
  std::vector<Id> sequence;
  std::optional<std::vector<IdSet>> separators;
};

struct OrderReport {
  bool valid = true;
  Id failing = kNoId;
  /// Per element id: the supplied separator if one was given, otherwise a
  /// minimal one found greedily. Empty sets for elements not yet reached.
  std::vector<IdSet> separators;
};

/// Finite mode: the sequence must list the ground set exactly once.
/// For every s, the component of ground \ X_s containing s must avoid the
/// predecessors of s.
OrderReport verify_csn_order(const Connectoid& k, const WellOrderWitness& w);

/// For every s, {s} must be a component of ground \ (X_s ∪ successors of s).
OrderReport verify_ccn_order(const Connectoid& k, const WellOrderWitness& w);

struct PrefixReport {
  bool valid = true;
  std::size_t checked = 0;
  std::string failing;
  std::vector<std::vector<std::string>> separators;
  bool prefix_relative = true;
};

/// Checks a finite prefix of an order on a presented instance inside the
/// ball of the given radius around the prefix. Separators, when supplied,
/// run parallel to the prefix. Verdicts are relative to the window.
PrefixReport verify_csn_prefix(const Instance& inst, const std::vector<std::string>& prefix,
                               const std::optional<std::vector<std::vector<std::string>>>& separators,
                               std::size_t radius, std::size_t budget = kDefaultBudget);

/// Breadth-first linear extension of the tree order with X_s the strict
/// down-set of s. PreconditionViolated unless t is a weak normal spanning tree.
WellOrderWitness csn_order_from_nst(const Connectoid& k, const RootedTree& t);

struct WellFoundedPO {
  std::size_t universe = 0;
  std::vector<std::pair<Id, Id>> covers;  // (u, s) with u below s

  std::vector<std::vector<Id>> lower_covers() const;
  /// The reflexive down-set of s.
  IdSet down_set(Id s) const;
  IdSet strict_down_set(Id s) const;
  IdSet up_set(Id s) const;
};

/// Covers (u, s) for u ∈ X_s. Verifies that each auxiliary separator tree
/// is finite and acyclic, that every down-set is finite, and that the
/// component of ground \ (strict down-set of s) containing s lies in the
/// up-set of s. PreconditionViolated if the witness fails verification,
/// ConstructionFailed if a derived property fails.
WellFoundedPO order_to_wellfounded_po(const Connectoid& k, const WellOrderWitness& w);

/// Least-id topological order of the po over `ground` with X_s the strict
/// down-set of s. CycleDetected if the covers contain a cycle.
WellOrderWitness po_to_order(const WellFoundedPO& po, const IdSet& ground);

}  // namespace connectoid
