#include "connectoid/command.hpp"

#include "connectoid/normal_tree.hpp"

namespace connectoid {

namespace {



std::vector<std::string> split_list(const std::vector<std::string>& given) {
  std::vector<std::string> out;
  for (const auto& text : given) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t cut = text.find(';', start);
      out.push_back(text.substr(start, cut - start));
      if (cut == std::string::npos) break;
      start = cut + 1;
    }
  }
  return out;
}

Json optional_id(const Connectoid& k, Id id) { return id == kNoId ? Json(nullptr) : Json(k.name(id)); }

const Connectoid& finite_of(const Instance& inst) {
  if (!inst.is_finite()) fail(ErrorKind::kMalformedInput, "this verb needs a finite instance");
  return inst.finite();
}

class Session {
 public:
  explicit Session(const Command& o) : o_(o) {
    bool fixture = false;
    if (o.instance_doc) {
      doc_ = *o.instance_doc;
    } else {
      for (const auto& name : presented_fixture_names()) fixture |= name == o.instance;
      if (!fixture) doc_ = read_json_file(o.instance);
    }
    inst_.emplace(fixture ? Instance(make_presented(o.instance)) : instance_from_json(doc_, o.budget));
    if (o.artifact_doc) {
      artifact_doc_ = *o.artifact_doc;
    } else if (!o.artifact.empty()) {
      artifact_doc_ = read_json_file(o.artifact);
    }
  }

  const Instance& inst() const { return *inst_; }

  /// The artifact under `key`: from --artifact, else embedded in the instance.
  const Json& artifact(const std::string& key) const {
    if (!artifact_doc_.is_null()) return unwrap(artifact_doc_, key);
    if (doc_.is_object() && doc_.contains(key)) return doc_[key];
    fail(ErrorKind::kMalformedInput, "no " + key + " given (use --artifact)");
  }

  bool has_artifact(const std::string& key) const {
    return !artifact_doc_.is_null() || (doc_.is_object() && doc_.contains(key));
  }

 private:
  const Command& o_;
  Json doc_;
  Json artifact_doc_;
  std::optional<Instance> inst_;
};

std::string clause_name(NormalityClause c) {
  switch (c) {
    case NormalityClause::kNone: return "none";
    case NormalityClause::kIncomparable: return "incomparable";
    case NormalityClause::kComparable: return "comparable";
    case NormalityClause::kComponentAbove: return "component-above";
  }
  return "none";
}

CommandResult check_family(const Command& o) {
  const StructureSpec spec = structure_from_json(o.instance_doc ? *o.instance_doc : read_json_file(o.instance));
  const auto* family = std::get_if<FiniteFamily>(&spec);
  if (!family) fail(ErrorKind::kMalformedInput, "check-family needs an instance of kind family");
  const FamilyReport r = validate_family(*family);
  CommandResult out;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    const char* kind = v.kind == FamilyViolationKind::kMissingEmpty       ? "missing-empty"
                       : v.kind == FamilyViolationKind::kMissingSingleton ? "missing-singleton"
                                                                          : "missing-union";
    violations.push_back({{"kind", kind}, {"first", v.first}, {"second", v.second}, {"missing", v.missing}});
  }
  out.report = {{"ok", r.ok}, {"violations", violations}};
  out.exit = r.ok ? kExitOk : kExitNegative;
  return out;
}

CommandResult components(const Session& s, const Command& o) {
  const auto sep = split_list(o.sep);
  std::vector<std::string> seeds{s.inst().origin()};
  seeds.insert(seeds.end(), sep.begin(), sep.end());
  const Window w = s.inst().view(seeds, o.depth, o.budget);
  Json comps = Json::array();
  for (const IdSet& c : w.connectoid.components(w.connectoid.set_of(sep))) {
    comps.push_back({{"elements", w.connectoid.names_of(c)}, {"open", c.intersects(w.frontier)}});
  }
  CommandResult out;
  out.report = {{"removed", sep}, {"components", comps}, {"count", comps.size()}, {"finite", s.inst().is_finite()}};
  if (!s.inst().is_finite()) out.report["depth"] = o.depth;
  return out;
}

IdSet target_ids(const Connectoid& k, const std::string& spec) {
  const TargetSet targets = named_targets(spec);
  IdSet x = k.empty_set();
  for_each_id(k.ground(), [&](Id e) {
    if (targets.contains(k.name(e))) x.set(e);
  });
  return x;
}

CommandResult nst_build(const Session& s, const Command& o) {
  CommandResult out;
  const std::string root = o.root.empty() ? s.inst().origin() : o.root;
  LayeredTreeOptions options;
  options.budget = o.budget;
  if (s.inst().is_finite()) {
    const Connectoid& k = s.inst().finite();
    const LayeredTreeResult r = layered_normal_tree(k, target_ids(k, o.target), k.id(root), options);
    out.report = {{"tree", tree_to_json(k, r.tree)}, {"rounds", r.state.rounds.size()}};
    out.dot = tree_to_dot(k, r.tree);
  } else {
    const PresentedLayeredTree r = layered_normal_tree_presented(s.inst().presented(), root, o.rounds, 0, options);
    out.report = {{"tree", tree_to_json(r.window.connectoid, r.result.tree)},
                  {"rounds", r.result.state.rounds.size()},
                  {"radius", r.window.radius}};
    out.dot = tree_to_dot(r.window.connectoid, r.result.tree);
  }
  out.report["dot"] = out.dot;
  return out;
}

CommandResult nst_verify(const Session& s, const Command& o) {
  CommandResult out;
  const Json& tree_doc = s.artifact("tree");
  if (s.inst().is_finite()) {
    const Connectoid& k = s.inst().finite();
    const RootedTree t = tree_from_json(k, tree_doc);
    const WeakNormalReport r = is_weak_normal(k, t);
    out.report = {{"normal", r.weak_normal},
                  {"spanning", t.nodes() == k.ground()},
                  {"clause", clause_name(r.clause)},
                  {"first", optional_id(k, r.first)},
                  {"second", optional_id(k, r.second)},
                  {"witness", r.weak_normal ? Json::array() : names_json(k, r.witness)}};
    out.exit = r.weak_normal ? kExitOk : kExitNegative;
    return out;
  }
  const NamedTree named = named_tree_from_json(tree_doc);
  const NormalReport r = is_normal_bounded(s.inst(), named.root, named.child_parent, o.depth, o.budget);
  Json necklaces = Json::array();
  for (const auto& w : r.witnesses) necklaces.push_back(necklace_to_json(w));
  const char* verdict = r.verdict == NormalVerdict::kNormal           ? "normal"
                        : r.verdict == NormalVerdict::kWitnessMissing ? "witness-missing"
                                                                      : "not-weak-normal";
  out.report = {{"verdict", verdict}, {"rays", r.rays}, {"necklaces", necklaces}, {"missing", r.missing},
                {"depth", o.depth}};
  out.exit = r.verdict == NormalVerdict::kNormal           ? kExitOk
             : r.verdict == NormalVerdict::kNotWeakNormal ? kExitNegative
                                                           : kExitInconclusive;
  return out;
}

CommandResult td_from_nst(const Session& s, const Command&) {
  const Connectoid& k = finite_of(s.inst());
  const TreeDecomposition td = nst_to_td(k, tree_from_json(k, s.artifact("tree")));
  CommandResult out;
  out.report = {{"td", td_to_json(k, td)}};
  out.dot = td_to_dot(k, td);
  return out;
}

CommandResult td_to_nst_verb(const Session& s, const Command& o) {
  const Connectoid& k = finite_of(s.inst());
  LayeredTreeOptions options;
  options.budget = o.budget;
  const RootedTree t = td_to_nst(k, td_from_json(k, s.artifact("td")), options);
  CommandResult out;
  out.report = {{"tree", tree_to_json(k, t)}};
  out.dot = tree_to_dot(k, t);
  return out;
}

CommandResult td_verify(const Session& s, const Command&) {
  const Connectoid& k = finite_of(s.inst());
  const TreeDecomposition td = td_from_json(k, s.artifact("td"));
  const TdReport r = validate_td(k, td);
  const char* kind = r.kind == TdViolationKind::kNone           ? "none"
                     : r.kind == TdViolationKind::kNotPartition ? "not-partition"
                     : r.kind == TdViolationKind::kNotComponent ? "not-component"
                                                                : "infinite-part";
  CommandResult out;
  out.report = {{"valid", r.valid},
                {"kind", kind},
                {"bag", r.bag == kNoId ? Json(nullptr) : Json(td.bag_name(r.bag))},
                {"elements", r.valid ? Json::array() : names_json(k, r.elements)}};
  out.exit = r.valid ? kExitOk : kExitNegative;
  out.dot = td_to_dot(k, td);
  return out;
}

CommandResult order_verify(const Session& s, const Command& o, bool csn) {
  CommandResult out;
  const Json& doc = s.artifact("witness");
  if (!s.inst().is_finite()) {
    if (!csn) fail(ErrorKind::kMalformedInput, "ccn-verify needs a finite instance");
    const auto prefix = sequence_from_json(doc);
    std::optional<std::vector<std::vector<std::string>>> seps;
    if (doc.contains("separators")) {
      seps.emplace();
      for (const auto& name : prefix) {
        if (!doc["separators"].contains(name)) fail(ErrorKind::kMalformedInput, "no separator for '" + name + "'");
        seps->push_back(doc["separators"][name].get<std::vector<std::string>>());
      }
    }
    const PrefixReport r = verify_csn_prefix(s.inst(), prefix, seps, o.depth, o.budget);
    Json separators = Json::object();
    for (std::size_t i = 0; i < r.separators.size() && i < prefix.size(); ++i) separators[prefix[i]] = r.separators[i];
    out.report = {{"valid", r.valid},           {"checked", r.checked},
                  {"failing", r.failing},       {"separators", separators},
                  {"prefix_relative", r.prefix_relative}, {"depth", o.depth}};
    out.exit = r.valid ? kExitOk : kExitNegative;
    return out;
  }
  const Connectoid& k = s.inst().finite();
  const WellOrderWitness w = witness_from_json(k, doc);
  const OrderReport r = csn ? verify_csn_order(k, w) : verify_ccn_order(k, w);
  Json separators = Json::object();
  for (Id x : w.sequence) separators[k.name(x)] = names_json(k, r.separators[x]);
  out.report = {{"valid", r.valid}, {"failing", optional_id(k, r.failing)}, {"separators", separators}};
  out.exit = r.valid ? kExitOk : kExitNegative;
  return out;
}

CommandResult csn_from_nst(const Session& s, const Command&) {
  const Connectoid& k = finite_of(s.inst());
  CommandResult out;
  out.report = {{"witness", witness_to_json(k, csn_order_from_nst(k, tree_from_json(k, s.artifact("tree"))))}};
  return out;
}

CommandResult npt_build(const Session& s, const Command&) {
  const Connectoid& k = finite_of(s.inst());
  std::vector<Id> order;
  if (s.has_artifact("witness")) {
    for (const auto& n : sequence_from_json(s.artifact("witness"))) order.push_back(k.id(n));
  } else {
    order = to_ids(k.ground());
  }
  const PartitionTree pt = build_normal_partition_tree(k, order);
  CommandResult out;
  out.report = {{"partition_tree", partition_tree_to_json(k, pt)}};
  out.dot = partition_tree_to_dot(k, pt);
  return out;
}

CommandResult npt_verify(const Session& s, const Command&) {
  const Connectoid& k = finite_of(s.inst());
  const PartitionTree pt = partition_tree_from_json(k, s.artifact("partition_tree"));
  const PartitionInvariantReport inv = check_partition_invariants(k, pt);
  auto part = [&](Id t) { return t == kNoId ? Json(nullptr) : Json(part_name(k, pt.parts[t])); };
  CommandResult out;
  out.report["invariants"] = {{"ok", inv.ok},
                              {"clause", inv.clause ? std::string(1, inv.clause) : std::string("none")},
                              {"first", part(inv.first)},
                              {"second", part(inv.second)}};
  bool ok = inv.ok;
  if (inv.ok) {
    const ContractedPartitionTree c = contract_partition_tree(k, pt);
    const TConnectoidReport r = verify_t_connectoid(c.quotient.connectoid, c.tree);
    const Connectoid& q = c.quotient.connectoid;
    out.report["t_connectoid"] = {{"ok", r.ok},
                                  {"clause", r.ok ? std::string("none") : r.clause},
                                  {"first", optional_id(q, r.first)},
                                  {"second", optional_id(q, r.second)}};
    ok = r.ok;
  }
  out.report["valid"] = ok;
  out.exit = ok ? kExitOk : kExitNegative;
  out.dot = partition_tree_to_dot(k, pt);
  return out;
}

CommandResult ends_shadows(const Session& s, const Command& o) {
  const auto sep = split_list(o.sep);
  const auto shadows = end_shadows(s.inst(), sep, o.depth, o.budget);
  Json cells = Json::array();
  for (const auto& e : shadows) cells.push_back({{"cell", e.cell}, {"boundary", e.boundary}});
  CommandResult out;
  out.report = {{"separator", sep}, {"depth", o.depth}, {"shadows", shadows.size()}, {"cells", cells}};
  return out;
}

CommandResult necklace_verify(const Session& s, const Command&) {
  const NecklaceReport r = verify_necklace_prefix(s.inst(), necklace_from_json(s.artifact("necklace")));
  CommandResult out;
  out.report = {{"valid", r.valid}};
  if (!r.valid) {
    out.report["first"] = r.first;
    out.report["second"] = r.second;
    out.report["reason"] = r.reason;
  }
  out.exit = r.valid ? kExitOk : kExitNegative;
  return out;
}

CommandResult disperse_probe(const Session& s, const Command& o) {
  const TargetSet targets = named_targets(o.target);
  const ProbeResult r = dispersedness_probe(s.inst(), targets, o.hits, o.budget);
  CommandResult out;
  out.report = {{"counterexample", r.counterexample}, {"hits", r.hits}, {"radius", r.radius}, {"target", o.target}};
  if (r.counterexample) {
    out.report["necklace"] = necklace_to_json(*r.witness);
    out.exit = kExitNegative;
  } else {
    // Without a counterexample the answer is only settled for finite data.
    const bool settled = s.inst().is_finite() || targets.members.has_value();
    out.report["settled"] = settled;
    out.exit = settled ? kExitOk : kExitInconclusive;
  }
  return out;
}

CommandResult strong_check(const Session& s, const Command& o) {
  const Connectoid& k = finite_of(s.inst());
  const StrongSubsetReport r = is_strong_subset(k, k.set_of(split_list(o.sub)), o.lambda, o.budget);
  CommandResult out;
  out.report = {{"strong", r.strong}, {"lambda", o.lambda}};
  if (!r.strong) {
    out.report["separator"] = names_json(k, r.separator);
    out.report["connected"] = names_json(k, r.connected);
  }
  out.exit = r.strong ? kExitOk : kExitNegative;
  return out;
}

CommandResult dispatch(const Command& o) {
  if (o.verb == "check-family") return check_family(o);
  const Session s(o);
  if (o.verb == "components") return components(s, o);
  if (o.verb == "nst-build") return nst_build(s, o);
  if (o.verb == "nst-verify") return nst_verify(s, o);
  if (o.verb == "td-from-nst") return td_from_nst(s, o);
  if (o.verb == "td-to-nst") return td_to_nst_verb(s, o);
  if (o.verb == "td-verify") return td_verify(s, o);
  if (o.verb == "csn-verify") return order_verify(s, o, true);
  if (o.verb == "ccn-verify") return order_verify(s, o, false);
  if (o.verb == "csn-from-nst") return csn_from_nst(s, o);
  if (o.verb == "npt-build") return npt_build(s, o);
  if (o.verb == "npt-verify") return npt_verify(s, o);
  if (o.verb == "ends-shadows") return ends_shadows(s, o);
  if (o.verb == "necklace-verify") return necklace_verify(s, o);
  if (o.verb == "disperse-probe") return disperse_probe(s, o);
  if (o.verb == "strong-check") return strong_check(s, o);
  fail(ErrorKind::kMalformedInput, "unknown verb '" + o.verb + "'");
}

int exit_for(const Error& e) {
  if (e.inconclusive()) return kExitInconclusive;
  if (e.kind() == ErrorKind::kMalformedInput || e.kind() == ErrorKind::kUnsupportedSize) return kExitMalformed;
  return kExitNegative;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& command_verbs() {
  static const std::vector<std::pair<std::string, std::string>> verbs = {
      {"check-family", "validate the axioms of a finite family"},
      {"components", "components after removing --sep"},
      {"nst-build", "build a normal tree over --target from --root"},
      {"nst-verify", "verify a normal tree"},
      {"td-from-nst", "tree-decomposition from a normal spanning tree"},
      {"td-to-nst", "normal spanning tree from a tree-decomposition"},
      {"td-verify", "validate a tree-decomposition"},
      {"csn-verify", "verify a separation order witness"},
      {"csn-from-nst", "separation order witness from a normal spanning tree"},
      {"ccn-verify", "verify a co-separation order witness"},
      {"npt-build", "build a normal partition tree"},
      {"npt-verify", "verify a normal partition tree"},
      {"ends-shadows", "end shadows beyond --sep"},
      {"necklace-verify", "verify a necklace prefix"},
      {"disperse-probe", "search for a necklace meeting --target often"},
      {"strong-check", "test whether --sub is --lambda strong"},
  };
  return verbs;
}

CommandResult run_command(const Command& cmd) {
  CommandResult out;
  try {
    out = dispatch(cmd);
  } catch (const Error& e) {
    out = CommandResult{};
    out.exit = exit_for(e);
    out.report = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
  }
  out.report["verb"] = cmd.verb;
  out.report["exit"] = out.exit;
  return out;
}

}  // namespace connectoid
