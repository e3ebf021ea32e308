#include "connectoid/decomposition.hpp"

#include "connectoid/normal_tree.hpp"

namespace connectoid {

TdReport validate_td(const Connectoid& k, const TreeDecomposition& td) {
  const std::size_t nb = td.tree.universe();
  if (!td.bags || td.bags->size() != nb || td.beta.size() != nb || td.gamma.size() != nb) {
    fail(ErrorKind::kMalformedInput, "decomposition maps do not match its bag set");
  }
  if (td.tree.empty()) fail(ErrorKind::kMalformedInput, "decomposition tree is empty");
  for (Id b = 0; b < nb; ++b) {
    if (td.beta[b].size() != k.universe() || td.gamma[b].size() != k.universe()) {
      fail(ErrorKind::kMalformedInput, "bag set uses foreign ids");
    }
  }
  TdReport report;
  IdSet covered = k.empty_set();
  for (Id b : td.tree.bfs_order()) {
    const IdSet overlap = covered & td.beta[b];
    if (overlap.any() || !td.beta[b].is_subset_of(k.ground())) {
      report.valid = false;
      report.kind = TdViolationKind::kNotPartition;
      report.bag = b;
      report.elements = overlap.any() ? overlap : td.beta[b] - k.ground();
      return report;
    }
    covered |= td.beta[b];
  }
  if (covered != k.ground()) {
    report.valid = false;
    report.kind = TdViolationKind::kNotPartition;
    report.elements = k.ground() - covered;
    return report;
  }
  for (Id b : td.tree.bfs_order()) {
    if (b == td.tree.root()) continue;
    IdSet above = k.empty_set();
    for_each_id(td.tree.up(b), [&](Id u) { above |= td.beta[u]; });
    if (!k.is_component(above, td.gamma[b])) {
      report.valid = false;
      report.kind = TdViolationKind::kNotComponent;
      report.bag = b;
      report.elements = above;
      return report;
    }
  }
  return report;
}

TreeDecomposition nst_to_td(const Connectoid& k, const RootedTree& t) {
  if (t.universe() != k.universe() || t.nodes() != k.ground()) {
    fail(ErrorKind::kPreconditionViolated, "tree does not span the ground set");
  }
  if (!is_weak_normal(k, t).weak_normal) fail(ErrorKind::kPreconditionViolated, "tree is not weak normal");
  TreeDecomposition td;
  td.bags = k.names_ptr();
  td.tree = t;
  td.beta.assign(k.universe(), k.empty_set());
  td.gamma.assign(k.universe(), k.empty_set());
  for_each_id(t.nodes(), [&](Id v) {
    td.beta[v].set(v);
    if (t.parent(v) != kNoId) td.gamma[v] = t.down(t.parent(v));
  });
  return td;
}

std::vector<IdSet> td_layers(const Connectoid& k, const TreeDecomposition& td) {
  std::vector<IdSet> layers;
  for (Id b : td.tree.bfs_order()) {
    const std::size_t d = td.tree.depth(b);
    if (layers.size() <= d) layers.resize(d + 1, k.empty_set());
    layers[d] |= td.beta[b];
  }
  return layers;
}

RootedTree td_to_nst(const Connectoid& k, const TreeDecomposition& td, const LayeredTreeOptions& options) {
  const TdReport report = validate_td(k, td);
  if (!report.valid) fail(ErrorKind::kPreconditionViolated, "decomposition does not validate");
  std::vector<IdSet> layers = td_layers(k, td);
  std::erase_if(layers, [](const IdSet& s) { return s.none(); });
  if (layers.empty()) fail(ErrorKind::kPreconditionViolated, "decomposition has no elements");
  const Id root = first_of(layers.front());
  RootedTree t = layered_normal_tree(k, layers, root, options).tree;
  if (t.nodes() != k.ground() || !is_weak_normal(k, t).weak_normal) {
    fail(ErrorKind::kConstructionFailed, "layered construction did not give a weak normal spanning tree");
  }
  return t;
}

}  // namespace connectoid
