#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "connectoid/connectoid.hpp"

namespace connectoid {

/// A countable, locally finite connectoid given lazily: an enumeration
/// e: ℕ -> elements and, per element, the finite list of its bonds.
class PresentedConnectoid {
 public:
  virtual ~PresentedConnectoid() = default;

  virtual std::string fixture() const = 0;
  /// Whether `name` is the canonical text form of an element.
  virtual bool contains(std::string_view name) const = 0;
  /// e(index).
  virtual std::string element(std::size_t index) const = 0;
  /// Inverse of element(). Requires contains(name).
  virtual std::size_t rank(std::string_view name) const = 0;
  /// All bonds through `name`; each contains `name`.
  virtual std::vector<std::vector<std::string>> bonds(std::string_view name) const = 0;

  std::string origin() const { return element(0); }
};

/// A presented connectoid built from callbacks.
class CustomPresented final : public PresentedConnectoid {
 public:
  struct Callbacks {
    std::function<bool(std::string_view)> contains;
    std::function<std::string(std::size_t)> element;
    std::function<std::size_t(std::string_view)> rank;
    std::function<std::vector<std::vector<std::string>>(std::string_view)> bonds;
  };
  CustomPresented(std::string name, Callbacks callbacks)
      : name_(std::move(name)), cb_(std::move(callbacks)) {}

  std::string fixture() const override { return name_; }
  bool contains(std::string_view n) const override { return cb_.contains(n); }
  std::string element(std::size_t i) const override { return cb_.element(i); }
  std::size_t rank(std::string_view n) const override { return cb_.rank(n); }
  std::vector<std::vector<std::string>> bonds(std::string_view n) const override { return cb_.bonds(n); }

 private:
  std::string name_;
  Callbacks cb_;
};

/// Fixture names: "double-ray" (ℤ, enumerated 0, 1, -1, 2, -2, ...),
/// "half-ray" (ℕ), "grid" (ℕ×ℕ, elements "(i,j)") and "binary-tree"
/// (elements "r", "r0", "r1", "r00", ...). MalformedInput otherwise.
std::shared_ptr<const PresentedConnectoid> make_presented(std::string_view name);
std::vector<std::string> presented_fixture_names();

/// A finite window of a presented connectoid: the ball of the given radius
/// around the seeds, as a finite connectoid whose generators are the bonds
/// lying inside the ball.
struct Window {
  std::shared_ptr<const PresentedConnectoid> source;
  Connectoid connectoid;
  std::size_t radius = 0;
  std::vector<std::size_t> distance;  // per id, bond-distance from the seeds
  std::vector<std::size_t> rank;      // per id, enumeration index
  IdSet frontier;                     // elements with a bond leaving the ball

  Id id(std::string_view name) const { return connectoid.id(name); }
  std::optional<Id> find(std::string_view name) const { return connectoid.find(name); }
  /// Elements at distance at most r.
  IdSet ball(std::size_t r) const;
  /// Window ids ordered by enumeration rank.
  std::vector<Id> by_rank() const;
};

/// Explores ball(seeds, radius). Every seed must be an element.
Window explore(std::shared_ptr<const PresentedConnectoid> source, const std::vector<std::string>& seeds,
               std::size_t radius, std::size_t budget = kDefaultBudget);

/// Either a finite connectoid or a presented one. Operations that accept
/// both work on windows: for a finite instance the window is the whole
/// connectoid and its frontier is empty.
class Instance {
 public:
  explicit Instance(Connectoid finite);
  explicit Instance(std::shared_ptr<const PresentedConnectoid> presented);

  bool is_finite() const noexcept { return !presented_; }
  const Connectoid& finite() const;
  const std::shared_ptr<const PresentedConnectoid>& presented() const noexcept { return presented_; }
  /// The origin: the least element (finite) or e(0) (presented).
  std::string origin() const;
  bool contains(std::string_view name) const;

  Window view(const std::vector<std::string>& seeds, std::size_t radius,
              std::size_t budget = kDefaultBudget) const;

 private:
  std::shared_ptr<const Connectoid> finite_;
  std::shared_ptr<const PresentedConnectoid> presented_;
};

/// Bond-distance between two elements, searching at most `limit` steps.
std::optional<std::size_t> presented_distance(const PresentedConnectoid& source, const std::string& a,
                                              const std::string& b, std::size_t limit);

}  // namespace connectoid
