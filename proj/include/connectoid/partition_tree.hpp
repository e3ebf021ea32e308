#pragma once

#include <string>
#include <vector>

#include "connectoid/connectoid.hpp"
#include "connectoid/rooted_tree.hpp"

namespace connectoid {

/// A rooted tree over part ids with parts[t] the connected set P_t.
struct PartitionTree {
  RootedTree tree;
  std::vector<IdSet> parts;

  std::vector<IdSet> part_list() const;  // in part-id order
};

struct TConnectoidReport {
  bool ok = true;
  std::string clause;  // "incomparable", "comparable", "cofinal", "interval"
  Id first = kNoId;
  Id second = kNoId;
};

/// Checks that t is a normal spanning order tree of `kp` (finite: weak
/// normal and spanning), that parent(t) ∈ N_t for every non-root t, and
/// the interval property for every comparable pair.
TConnectoidReport verify_t_connectoid(const Connectoid& kp, const RootedTree& t);

/// Runs the normal partition tree recursion over `order`, a permutation of
/// the ground set. The part of a new node placed on top of m = max M_K is
/// the connected closure inside K of H ∩ K, where H is a shortest connected
/// set in K_m containing s and meeting P_m. NotConnected unless k is.
PartitionTree build_normal_partition_tree(const Connectoid& k, const std::vector<Id>& order);

struct PartitionInvariantReport {
  bool ok = true;
  char clause = 0;  // 'a', 'b', 'c' or 'd'
  Id first = kNoId;
  Id second = kNoId;
};

/// Invariants (a)-(d) of the construction on a finished partition tree.
PartitionInvariantReport check_partition_invariants(const Connectoid& k, const PartitionTree& pt);

/// The contraction of the parts, with the tree transported to quotient ids.
struct ContractedPartitionTree {
  Quotient quotient;
  RootedTree tree;
};
ContractedPartitionTree contract_partition_tree(const Connectoid& k, const PartitionTree& pt);

}  // namespace connectoid
