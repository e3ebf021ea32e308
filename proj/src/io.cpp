#include "connectoid/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "connectoid/adapters.hpp"

namespace connectoid {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    fail(ErrorKind::kMalformedInput, std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

std::vector<std::vector<std::string>> string_lists(const Json& j) {
  return j.get<std::vector<std::vector<std::string>>>();
}

std::vector<Edge> edges(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    auto pair = strings(e);
    if (pair.size() != 2) fail(ErrorKind::kMalformedInput, "an edge needs exactly two endpoints");
    out.emplace_back(pair[0], pair[1]);
  }
  return out;
}

Sign sign(const Json& j) {
  const auto s = j.get<std::string>();
  if (s == "+") return Sign::kPlus;
  if (s == "-") return Sign::kMinus;
  fail(ErrorKind::kMalformedInput, "edge signs are '+' or '-'");
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ",") + n;
  return "{" + out + "}";
}

}  // namespace

Json parse_json(const std::string& text) {
  return guarded("invalid JSON", [&] { return Json::parse(text); });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kMalformedInput, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

StructureSpec structure_from_json(const Json& doc) {
  return guarded("invalid instance", [&]() -> StructureSpec {
    const auto kind = doc.at("kind").get<std::string>();
    auto list = [&](const char* key) { return doc.contains(key) ? strings(doc[key]) : std::vector<std::string>{}; };
    if (kind == "family") return FiniteFamily{strings(doc.at("ground")), string_lists(doc.at("members"))};
    if (kind == "bonds") return Hypergraph{strings(doc.at("ground")), string_lists(doc.at("bonds"))};
    if (kind == "undirected") return UndirectedGraph{list("vertices"), edges(doc.at("edges"))};
    if (kind == "digraph") return Digraph{list("vertices"), edges(doc.at("edges"))};
    if (kind == "hypergraph") return Hypergraph{list("vertices"), string_lists(doc.at("edges"))};
    if (kind == "matroid-circuits") return MatroidCircuits{list("elements"), string_lists(doc.at("circuits"))};
    if (kind == "bidirected") {
      BidirectedGraph g{list("vertices"), {}};
      for (const auto& e : doc.at("edges")) {
        g.edges.push_back({e.at("u").get<std::string>(), sign(e.at("at_u")), e.at("v").get<std::string>(),
                           sign(e.at("at_v"))});
      }
      return g;
    }
    fail(ErrorKind::kMalformedInput, "unknown instance kind '" + kind + "'");
  });
}

Instance instance_from_json(const Json& doc, std::size_t budget) {
  const auto kind = guarded("invalid instance", [&] { return doc.at("kind").get<std::string>(); });
  if (kind == "presented") {
    return Instance(make_presented(guarded("invalid instance", [&] { return doc.at("fixture").get<std::string>(); })));
  }
  return Instance(build_connectoid(structure_from_json(doc), budget));
}

Instance load_instance(const std::string& source, std::size_t budget) {
  for (const auto& name : presented_fixture_names())
    if (source == name) return Instance(make_presented(name));
  return instance_from_json(read_json_file(source), budget);
}

const Json& unwrap(const Json& doc, const std::string& key) {
  if (doc.is_object() && doc.contains(key)) return doc[key];
  return doc;
}

NamedTree named_tree_from_json(const Json& doc) {
  return guarded("invalid tree", [&] {
    NamedTree t;
    t.root = doc.at("root").get<std::string>();
    if (doc.contains("parent")) {
      for (const auto& [child, parent] : doc["parent"].items()) t.child_parent.emplace_back(child, parent.get<std::string>());
    }
    return t;
  });
}

RootedTree tree_from_json(const Connectoid& k, const Json& doc) {
  const NamedTree t = named_tree_from_json(doc);
  std::vector<std::pair<Id, Id>> cp;
  for (const auto& [c, p] : t.child_parent) cp.emplace_back(k.id(c), k.id(p));
  return RootedTree::from_parents(k.universe(), k.id(t.root), cp);
}

Json tree_to_json(const Connectoid& k, const RootedTree& t) {
  Json parent = Json::object();
  for (auto [p, c] : t.edges()) parent[k.name(c)] = k.name(p);
  return Json{{"root", k.name(t.root())}, {"parent", parent}};
}

TreeDecomposition td_from_json(const Connectoid& k, const Json& doc) {
  return guarded("invalid decomposition", [&] {
    const NamedTree named = named_tree_from_json(doc.at("tree"));
    std::vector<std::string> bag_names{named.root};
    for (const auto& [c, p] : named.child_parent) {
      bag_names.push_back(c);
      bag_names.push_back(p);
    }
    for (const auto& [bag, _] : doc.at("beta").items()) bag_names.push_back(bag);
    std::sort(bag_names.begin(), bag_names.end());
    bag_names.erase(std::unique(bag_names.begin(), bag_names.end()), bag_names.end());
    TreeDecomposition td;
    td.bags = std::make_shared<const ElementNames>(bag_names);
    auto bag = [&](const std::string& name) {
      auto id = td.bags->find(name);
      if (!id) fail(ErrorKind::kMalformedInput, "unknown bag '" + name + "'");
      return *id;
    };
    std::vector<std::pair<Id, Id>> cp;
    for (const auto& [c, p] : named.child_parent) cp.emplace_back(bag(c), bag(p));
    td.tree = RootedTree::from_parents(bag_names.size(), bag(named.root), cp);
    if (td.tree.size() != bag_names.size()) fail(ErrorKind::kMalformedInput, "a bag is not a tree node");
    td.beta.assign(bag_names.size(), k.empty_set());
    td.gamma.assign(bag_names.size(), k.empty_set());
    for (const auto& [name, members] : doc.at("beta").items()) td.beta[bag(name)] = k.set_of(strings(members));
    if (doc.contains("gamma")) {
      for (const auto& [key, members] : doc["gamma"].items()) {
        std::optional<Id> child;
        for (std::size_t cut = key.find('-'); cut != std::string::npos; cut = key.find('-', cut + 1)) {
          auto u = td.bags->find(key.substr(0, cut));
          auto v = td.bags->find(key.substr(cut + 1));
          if (!u || !v) continue;
          std::optional<Id> here;
          if (td.tree.parent(*v) == *u) here = *v;
          if (td.tree.parent(*u) == *v) here = *u;
          if (!here) continue;
          if (child && *child != *here) fail(ErrorKind::kMalformedInput, "ambiguous edge key '" + key + "'");
          child = here;
        }
        if (!child) fail(ErrorKind::kMalformedInput, "edge key '" + key + "' names no tree edge");
        td.gamma[*child] = k.set_of(strings(members));
      }
    }
    return td;
  });
}

Json td_to_json(const Connectoid& k, const TreeDecomposition& td) {
  Json parent = Json::object(), beta = Json::object(), gamma = Json::object();
  for_each_id(td.tree.nodes(), [&](Id b) { beta[td.bag_name(b)] = k.names_of(td.beta[b]); });
  for (auto [p, c] : td.tree.edges()) {
    parent[td.bag_name(c)] = td.bag_name(p);
    gamma[td.bag_name(p) + "-" + td.bag_name(c)] = k.names_of(td.gamma[c]);
  }
  return Json{{"tree", {{"root", td.bag_name(td.tree.root())}, {"parent", parent}}}, {"beta", beta}, {"gamma", gamma}};
}

std::vector<std::string> sequence_from_json(const Json& doc) {
  return guarded("invalid witness", [&] { return strings(doc.at("sequence")); });
}

WellOrderWitness witness_from_json(const Connectoid& k, const Json& doc) {
  return guarded("invalid witness", [&] {
    WellOrderWitness w;
    for (const auto& n : strings(doc.at("sequence"))) w.sequence.push_back(k.id(n));
    if (doc.contains("separators")) {
      w.separators.emplace(k.universe(), k.empty_set());
      for (const auto& [s, x] : doc["separators"].items()) (*w.separators)[k.id(s)] = k.set_of(strings(x));
    }
    return w;
  });
}

Json witness_to_json(const Connectoid& k, const WellOrderWitness& w) {
  Json seq = Json::array();
  for (Id s : w.sequence) seq.push_back(k.name(s));
  Json out{{"sequence", seq}};
  if (w.separators) {
    Json sep = Json::object();
    for (Id s : w.sequence) sep[k.name(s)] = k.names_of((*w.separators)[s]);
    out["separators"] = sep;
  }
  return out;
}

NecklaceWitness necklace_from_json(const Json& doc) {
  return guarded("invalid necklace", [&] {
    NecklaceWitness w;
    w.beads = string_lists(doc.at("beads"));
    return w;
  });
}

Json necklace_to_json(const NecklaceWitness& w) { return Json{{"beads", w.beads}}; }

PartitionTree partition_tree_from_json(const Connectoid& k, const Json& doc) {
  return guarded("invalid partition tree", [&] {
    const NamedTree named = named_tree_from_json(doc.at("tree"));
    std::map<std::string, Id> index;
    PartitionTree pt;
    for (const auto& [name, members] : doc.at("parts").items()) {
      index.emplace(name, static_cast<Id>(pt.parts.size()));
      pt.parts.push_back(k.set_of(strings(members)));
    }
    auto node = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) fail(ErrorKind::kMalformedInput, "unknown part '" + name + "'");
      return it->second;
    };
    std::vector<std::pair<Id, Id>> cp;
    for (const auto& [c, p] : named.child_parent) cp.emplace_back(node(c), node(p));
    pt.tree = RootedTree::from_parents(pt.parts.size(), node(named.root), cp);
    if (pt.tree.size() != pt.parts.size()) fail(ErrorKind::kMalformedInput, "a part is not a tree node");
    return pt;
  });
}

Json partition_tree_to_json(const Connectoid& k, const PartitionTree& pt) {
  Json parent = Json::object(), parts = Json::object();
  for (Id t = 0; t < pt.parts.size(); ++t) parts[part_name(k, pt.parts[t])] = k.names_of(pt.parts[t]);
  for (auto [p, c] : pt.tree.edges()) parent[part_name(k, pt.parts[c])] = part_name(k, pt.parts[p]);
  return Json{{"tree", {{"root", part_name(k, pt.parts[pt.tree.root()])}, {"parent", parent}}}, {"parts", parts}};
}

Json names_json(const Connectoid& k, const IdSet& s) { return k.names_of(s); }

std::string tree_to_dot(const Connectoid& k, const RootedTree& t) {
  std::string out = "digraph tree {\n";
  out += "  " + quoted(k.name(t.root())) + ";\n";
  for (auto [p, c] : t.edges()) out += "  " + quoted(k.name(p)) + " -> " + quoted(k.name(c)) + ";\n";
  return out + "}\n";
}

std::string td_to_dot(const Connectoid& k, const TreeDecomposition& td) {
  std::string out = "digraph decomposition {\n";
  for (Id b : td.tree.bfs_order()) {
    out += "  " + quoted(td.bag_name(b)) + " [label=" + quoted(td.bag_name(b) + " " + joined(k.names_of(td.beta[b]))) +
           "];\n";
  }
  for (auto [p, c] : td.tree.edges()) {
    out += "  " + quoted(td.bag_name(p)) + " -> " + quoted(td.bag_name(c)) +
           " [label=" + quoted(joined(k.names_of(td.gamma[c]))) + "];\n";
  }
  return out + "}\n";
}

std::string partition_tree_to_dot(const Connectoid& k, const PartitionTree& pt) {
  std::string out = "digraph partition {\n";
  for (Id t : pt.tree.bfs_order()) {
    const std::string name = part_name(k, pt.parts[t]);
    out += "  " + quoted(name) + " [label=" + quoted(joined(k.names_of(pt.parts[t]))) + "];\n";
  }
  for (auto [p, c] : pt.tree.edges())
    out += "  " + quoted(part_name(k, pt.parts[p])) + " -> " + quoted(part_name(k, pt.parts[c])) + ";\n";
  return out + "}\n";
}

}  // namespace connectoid
