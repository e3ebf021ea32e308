#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "connectoid/layered_tree.hpp"
#include "connectoid/presented.hpp"
#include "connectoid/rooted_tree.hpp"

namespace connectoid {

using Names = std::vector<std::string>;

/// A finite prefix H_1..H_m of a necklace witness. When present, `extender`
/// returns the bead with a given zero-based index for any index.
struct NecklaceWitness {
  std::vector<Names> beads;
  std::function<Names(std::size_t)> extender;
};

/// Beads {v_i, v_{i+1}} along a path given by its vertex sequence.
NecklaceWitness path_necklace(std::function<std::string(std::size_t)> vertex, std::size_t prefix);

/// `w` with at least `m` beads (fewer if it has no extender).
NecklaceWitness extend_prefix(const NecklaceWitness& w, std::size_t m);

struct NecklaceReport {
  bool valid = true;
  std::size_t first = 0;   // zero-based bead indices of the violation
  std::size_t second = 0;
  std::string reason;
};

NecklaceReport verify_necklace_prefix(const Instance& inst, const NecklaceWitness& w);

/// Re-beads the part of the prefix that stays attached to the late beads
/// after deleting x. DepthExhausted if x meets the last available bead.
NecklaceWitness necklace_tail(const Instance& inst, const NecklaceWitness& w, const Names& x,
                              std::size_t budget = kDefaultBudget);

struct ConvergenceReport {
  bool converges = true;
  Names separator;
  Names first_cell;
  Names second_cell;
};

/// Separators are the balls of radius r < depth around the origin; the late
/// elements of y are those at distance in (depth, 2*depth]. y splits at a
/// separator when late elements fall in two different cells. A sequence
/// flagged complete is finite and converges vacuously.
ConvergenceReport converges_to_bounded(const Instance& inst, const Names& y, bool complete,
                                       std::size_t depth, std::size_t budget = kDefaultBudget);

struct EndShadow {
  Names separator;
  Names cell;
  Names boundary;  // cell elements on the exploration frontier
  std::size_t depth = 0;
};

/// Frontier-touching cells of ball(origin, depth) \ x. DepthExhausted if x
/// leaves the ball.
std::vector<EndShadow> end_shadows(const Instance& inst, const Names& x, std::size_t depth,
                                   std::size_t budget = kDefaultBudget);

struct SameEndReport {
  bool distinguished = false;
  Names separator;
};

/// Tries the separators ball(origin, r) for r < depth.
SameEndReport same_end_bounded(const Instance& inst, const NecklaceWitness& w1, const NecklaceWitness& w2,
                               std::size_t depth, std::size_t budget = kDefaultBudget);

struct TargetSet {
  std::function<bool(std::string_view)> contains;
  /// Set when the target set is known to be finite.
  std::optional<Names> members;
};

/// Named target sets: "all", "even", "odd", a grid column "column:i" (cells
/// "(i,j)"), or a finite list "list:a;b;c".
/// Parity reads integers by value, grid cells by i+j and binary-tree
/// nodes by their length below the root.
TargetSet named_targets(std::string_view spec);

struct ProbeResult {
  bool counterexample = false;
  std::optional<NecklaceWitness> witness;
  std::size_t hits = 0;
  std::size_t radius = 0;
};

/// Searches for a necklace prefix meeting the targets at least `hits` times
/// whose last bead reaches the exploration frontier. Finite instances and
/// finite target sets with fewer than `hits` members give no counterexample.
/// BudgetExceeded when the search runs out of budget.
ProbeResult dispersedness_probe(const Instance& inst, const TargetSet& targets, std::size_t hits,
                                std::size_t budget = kDefaultBudget);

/// A necklace prefix containing every node of a root path: H_1 is the root;
/// x_{n+1} is the first later path node whose component above misses
/// H_1..H_n (or the last node), and H_{n+1} is a connected set inside the
/// component above x_n containing the path segment from x_n to x_{n+1}.
std::optional<NecklaceWitness> ray_necklace(const Window& w, const RootedTree& t, const std::vector<Id>& path);

enum class NormalVerdict { kNormal, kWitnessMissing, kNotWeakNormal };

struct NormalReport {
  NormalVerdict verdict = NormalVerdict::kNormal;
  std::vector<Names> rays;                 // the ray prefixes examined
  std::vector<NecklaceWitness> witnesses;  // one per examined ray
  Names missing;                           // first ray lacking a witness
};

/// A tree over element names. Finite instances: normal iff weak normal.
/// Presented instances: the tree must be weak normal inside the ball of
/// radius `depth` around it, and each root path with `depth` nodes must
/// admit a verified necklace witness.
NormalReport is_normal_bounded(const Instance& inst, const std::string& root,
                               const std::vector<std::pair<std::string, std::string>>& child_parent,
                               std::size_t depth, std::size_t budget = kDefaultBudget);

struct PresentedLayeredTree {
  Window window;
  LayeredTreeResult result;
};

/// Runs `rounds` rounds of the layered recursion inside a window around the
/// root with every element as a singleton layer in enumeration order. The
/// window radius starts at `radius` (2*rounds when 0) and doubles while the
/// tree or Θ come within two steps of the frontier.
PresentedLayeredTree layered_normal_tree_presented(const std::shared_ptr<const PresentedConnectoid>& source,
                                                   const std::string& root, std::size_t rounds, std::size_t radius = 0,
                                                   LayeredTreeOptions options = {});

struct AdhesionProbe {
  Names component;                 // the probe's component of the window minus the base
  std::optional<Names> separator;  // empty when no set of at most `bound` base elements separates it
};

/// Bounded adhesion search inside ball(origin ∪ probe, radius): looks for
/// at most `bound` base elements whose removal already cuts the probe's
/// component off from the rest of the base.
AdhesionProbe bounded_adhesion(const Instance& inst, const TargetSet& base, const std::string& probe,
                               std::size_t bound, std::size_t radius, std::size_t budget = kDefaultBudget);

}  // namespace connectoid

