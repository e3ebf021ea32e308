#pragma once

#include <string>
#include <utility>
#include <vector>

#include "connectoid/adapters.hpp"
#include "connectoid/decomposition.hpp"
#include "connectoid/infinitary.hpp"
#include "connectoid/partition_tree.hpp"
#include "connectoid/presented.hpp"
#include "connectoid/separation.hpp"
#include "json.hpp"

namespace connectoid {

using Json = nlohmann::json;

/// Parses JSON text or a file; MalformedInput on syntax errors.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// Instance documents carry a "kind": family, bonds, undirected, digraph,
/// bidirected, hypergraph, matroid-circuits or presented.
StructureSpec structure_from_json(const Json& doc);
Instance instance_from_json(const Json& doc, std::size_t budget = kDefaultBudget);
/// A fixture name or a path to an instance document.
Instance load_instance(const std::string& source, std::size_t budget = kDefaultBudget);

/// Artifacts may be given bare or wrapped in a report under `key`.
const Json& unwrap(const Json& doc, const std::string& key);

/// {"root": r, "parent": {child: parent}}
struct NamedTree {
  std::string root;
  std::vector<std::pair<std::string, std::string>> child_parent;
};
NamedTree named_tree_from_json(const Json& doc);
RootedTree tree_from_json(const Connectoid& k, const Json& doc);
Json tree_to_json(const Connectoid& k, const RootedTree& t);

/// {"tree": {...}, "beta": {bag: [...]}, "gamma": {"u-v": [...]}}
TreeDecomposition td_from_json(const Connectoid& k, const Json& doc);
Json td_to_json(const Connectoid& k, const TreeDecomposition& td);

/// {"sequence": [...], "separators": {s: [...]}}
WellOrderWitness witness_from_json(const Connectoid& k, const Json& doc);
Json witness_to_json(const Connectoid& k, const WellOrderWitness& w);
std::vector<std::string> sequence_from_json(const Json& doc);

/// {"beads": [[...], ...]}
NecklaceWitness necklace_from_json(const Json& doc);
Json necklace_to_json(const NecklaceWitness& w);

/// {"tree": {...over part names...}, "parts": {name: [...]}}; part names
/// join their elements with '+'.
PartitionTree partition_tree_from_json(const Connectoid& k, const Json& doc);
Json partition_tree_to_json(const Connectoid& k, const PartitionTree& pt);

Json names_json(const Connectoid& k, const IdSet& s);

std::string tree_to_dot(const Connectoid& k, const RootedTree& t);
std::string td_to_dot(const Connectoid& k, const TreeDecomposition& td);
std::string partition_tree_to_dot(const Connectoid& k, const PartitionTree& pt);

}  // namespace connectoid
