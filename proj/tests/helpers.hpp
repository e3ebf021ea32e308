#pragma once

#include <string>
#include <vector>

#include "connectoid/adapters.hpp"
#include "connectoid/connectoid.hpp"
#include "connectoid/rooted_tree.hpp"

namespace fixtures {

using connectoid::Connectoid;
using connectoid::Id;
using connectoid::IdSet;
using connectoid::RootedTree;

inline Connectoid p3() { return connectoid::from_undirected({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}}); }
inline Connectoid k3() {
  return connectoid::from_undirected({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}});
}
inline Connectoid dipath() { return connectoid::from_digraph({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}}); }
inline Connectoid c3_directed() {
  return connectoid::from_digraph({{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}});
}

inline IdSet set(const Connectoid& k, std::vector<std::string> names) { return k.set_of(names); }

/// A tree over the connectoid's ids from (child, parent) name pairs.
inline RootedTree tree(const Connectoid& k, const std::string& root,
                       const std::vector<std::pair<std::string, std::string>>& child_parent) {
  std::vector<std::pair<Id, Id>> cp;
  for (const auto& [c, p] : child_parent) cp.emplace_back(k.id(c), k.id(p));
  return RootedTree::from_parents(k.universe(), k.id(root), cp);
}

inline RootedTree chain(const Connectoid& k, const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, std::string>> cp;
  for (std::size_t i = 1; i < names.size(); ++i) cp.emplace_back(names[i], names[i - 1]);
  return tree(k, names.front(), cp);
}

}  // namespace fixtures
