#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "connectoid/errors.hpp"
#include "connectoid/id_set.hpp"

namespace connectoid {

/// A finite family F of finite subsets of a ground set, given extensionally.
struct FiniteFamily {
  std::vector<std::string> ground;
  std::vector<std::vector<std::string>> members;
};

/// Sorted, interned element names shared between a connectoid and the
/// connectoids derived from it by restriction.
class ElementNames {
 public:
  explicit ElementNames(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& operator[](Id id) const { return names_[id]; }
  const std::vector<std::string>& all() const noexcept { return names_; }
  std::optional<Id> find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Id> index_;
};

/// A connectoid on a finite ground set, presented by generators ("bonds"):
/// finite connected sets whose closure under unions of intersecting members
/// is exactly the family of finite connected sets. Empty sets and singletons
/// are always connected and are never stored as generators.
///
/// Ids index a universe of names; the ground set may be a proper subset of
/// the universe (induced subconnectoids keep the host's ids).
class Connectoid {
 public:
  Connectoid() = default;

  /// Builds the connectoid generated by `bonds` on `ground`. Names are
  /// sorted into canonical order; bonds mentioning unknown elements throw
  /// MalformedInput.
  static Connectoid from_bonds(std::vector<std::string> ground,
                               const std::vector<std::vector<std::string>>& bonds);

  /// Builds the connectoid induced by a finite family; the family is kept as
  /// `exact_family()`. Axiom violations are not rejected here (see
  /// validate_family); the generated connectoid is that of the closure.
  static Connectoid from_family(const FiniteFamily& family);

  /// Generators given directly as id sets over `names`.
  static Connectoid from_generators(std::shared_ptr<const ElementNames> names, IdSet ground,
                                    std::vector<IdSet> generators);

  /// Enumerates every subset of size >= 2 of `names` and keeps the minimal
  /// generating family of the closure of those satisfying `is_connected`.
  /// At most `max_elements` names are accepted (UnsupportedSize otherwise).
  static Connectoid from_predicate(std::vector<std::string> names,
                                   const std::function<bool(std::uint64_t mask)>& is_connected,
                                   std::size_t max_elements = 16);

  std::size_t universe() const noexcept { return names_ ? names_->size() : 0; }
  const IdSet& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return ground_.count(); }
  const std::shared_ptr<const ElementNames>& names_ptr() const noexcept { return names_; }
  const std::string& name(Id id) const { return (*names_)[id]; }
  std::optional<Id> find(std::string_view name) const;
  /// Looks up a ground element by name; MalformedInput if unknown.
  Id id(std::string_view name) const;
  IdSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const IdSet& s) const;
  IdSet empty_set() const { return IdSet(universe()); }

  const std::vector<IdSet>& generators() const noexcept { return generators_; }
  std::span<const std::uint32_t> generators_at(Id id) const { return incident_[id]; }
  /// Members of generator `gi` in increasing id order.
  std::span<const Id> generator_members(std::size_t gi) const { return members_[gi]; }
  const std::optional<FiniteFamily>& exact_family() const noexcept { return exact_; }

  /// True iff every pair of elements of `c` lies in a finite connected
  /// subset of `c`. `c` must lie inside the ground set.
  bool is_connected(const IdSet& c) const;

  /// The component of `allowed` containing `x` (empty if x is not allowed).
  IdSet component_within(Id x, const IdSet& allowed) const;
  /// The component of ground \ removed containing `x`.
  IdSet component_of(Id x, const IdSet& removed) const;
  /// All components of ground \ removed, ordered by least element.
  std::vector<IdSet> components(const IdSet& removed) const;
  /// True iff `cell` is a component of ground \ removed.
  bool is_component(const IdSet& cell, const IdSet& removed) const;

  /// A smallest-step connected set inside `allowed` containing `from` and
  /// some element of `targets`: the union of a shortest chain of generators.
  /// Returns nullopt if none exists.
  std::optional<IdSet> connecting_set(Id from, const IdSet& targets, const IdSet& allowed) const;

  /// The induced subconnectoid on `sub` (same ids, generators inside `sub`).
  Connectoid induced(const IdSet& sub) const;

 private:
  void index_generators();

  std::shared_ptr<const ElementNames> names_;
  IdSet ground_;
  std::vector<IdSet> generators_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::vector<Id>> members_;
  std::optional<FiniteFamily> exact_;
};

// ---------------------------------------------------------------------------
// Family validation

enum class FamilyViolationKind { kMissingEmpty, kMissingSingleton, kMissingUnion };

struct FamilyViolation {
  FamilyViolationKind kind;
  std::vector<std::string> first;    // F (or the singleton's element)
  std::vector<std::string> second;   // F' for union violations
  std::vector<std::string> missing;  // the set that should be a member
};

struct FamilyReport {
  bool ok = true;
  std::vector<FamilyViolation> violations;
};

/// Checks axioms (i) and (ii) by enumeration. Members naming unknown
/// elements throw MalformedInput.
FamilyReport validate_family(const FiniteFamily& family);

/// All finite connected sets of a finite connectoid, in canonical order
/// (including the empty set and singletons).
std::vector<IdSet> enumerate_connected_sets(const Connectoid& k, std::size_t budget = kDefaultBudget);

/// Connected sets containing `seed`, contained in `allowed`, with at most
/// `max_size` elements, in canonical order.
std::vector<IdSet> connected_sets_containing(const Connectoid& k, Id seed, const IdSet& allowed,
                                             std::size_t max_size, StepBudget& budget);

/// A connected set c' with x ⊆ c' ⊆ c: the union of shortest generator
/// chains inside c from the least element of x to each element of x.
/// NotConnected if c is not connected; MalformedInput if x ⊄ c.
IdSet connected_closure(const Connectoid& k, const IdSet& c, const IdSet& x);

// ---------------------------------------------------------------------------
// Structural constructions

/// Result of contracting a partition: element i of `connectoid` is the part
/// `parts[i]` of the host.
struct Quotient {
  Connectoid connectoid;
  std::vector<IdSet> parts;

  /// Quotient id of the part containing host element `x`.
  Id part_of(Id x) const;
};

/// Canonical name of a part: its element names joined by '+'.
std::string part_name(const Connectoid& k, const IdSet& part);

/// Contracts a partition of the ground set into connected parts. A set of
/// parts is connected iff its union is connected in `k`.
Quotient contract(const Connectoid& k, const std::vector<IdSet>& parts);

/// The torso at `sub`: its connected sets are the traces C ∩ sub of the
/// connected sets C of `k`. Finite, at most 16 elements in `sub`.
Connectoid torso(const Connectoid& k, const IdSet& sub);

/// Weak contraction: a set Y of parts is connected iff some connected set
/// C of `k` satisfies {rep(P) : P in Y} ⊆ C ⊆ ⋃Y. `reps[i]` must lie in
/// `parts[i]`.
Quotient weak_contract(const Connectoid& k, const std::vector<IdSet>& parts,
                       const std::vector<Id>& reps);

// ---------------------------------------------------------------------------
// Links

/// C1 ∪ C2 is an X–Y link when C1, C2 are connected, X ⊆ C1 \ C2,
/// Y ⊆ C2 \ C1 and C1 ∩ C2 ≠ ∅.
struct Link {
  IdSet c1;
  IdSet c2;
  IdSet x;
  IdSet y;

  IdSet support() const { return c1 | c2; }
};

bool check_link(const Connectoid& k, const Link& link);

struct LinkEnumeration {
  std::vector<Link> links;
  /// Indices into `links` of a maximal family of pairwise internally
  /// disjoint links (meeting only inside X ∪ Y), chosen greedily in order.
  std::vector<std::size_t> disjoint_family;
};

/// All X–Y links with |C1 ∪ C2| <= bound. MalformedInput if X and Y meet or
/// either is empty.
LinkEnumeration enumerate_links(const Connectoid& k, const IdSet& x, const IdSet& y,
                                std::size_t bound, std::size_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Strong subsets

struct StrongSubsetReport {
  bool strong = true;
  IdSet separator;  // X with |X| <= lambda, outside `sub`
  IdSet connected;  // C whose trace cannot be re-realized avoiding X
};

/// Whether `sub` is lambda-strong: every trace C ∩ sub of a finite
/// connected set can be re-realized by a connected set avoiding any X
/// outside `sub` with |X| <= lambda.
StrongSubsetReport is_strong_subset(const Connectoid& k, const IdSet& sub, std::size_t lambda,
                                    std::size_t budget = kDefaultBudget);

}  // namespace connectoid
