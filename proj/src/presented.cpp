#include "connectoid/presented.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace connectoid {

namespace {

std::optional<long long> parse_integer(std::string_view s) {
  if (s.empty() || s == "-0") return std::nullopt;
  std::string_view digits = s.front() == '-' ? s.substr(1) : s;
  if (digits.empty() || (digits.size() > 1 && digits.front() == '0')) return std::nullopt;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

void require_element(const PresentedConnectoid& k, std::string_view name) {
  if (!k.contains(name)) {
    fail(ErrorKind::kMalformedInput, "'" + std::string(name) + "' is not an element of " + k.fixture());
  }
}

class DoubleRay final : public PresentedConnectoid {
 public:
  std::string fixture() const override { return "double-ray"; }
  bool contains(std::string_view n) const override { return parse_integer(n).has_value(); }
  std::string element(std::size_t i) const override {
    if (i == 0) return "0";
    const long long m = static_cast<long long>((i + 1) / 2);
    return std::to_string(i % 2 == 1 ? m : -m);
  }
  std::size_t rank(std::string_view n) const override {
    require_element(*this, n);
    const long long v = *parse_integer(n);
    return v > 0 ? static_cast<std::size_t>(2 * v - 1) : static_cast<std::size_t>(-2 * v);
  }
  std::vector<std::vector<std::string>> bonds(std::string_view n) const override {
    require_element(*this, n);
    const long long v = *parse_integer(n);
    const std::string s(n);
    return {{std::to_string(v - 1), s}, {s, std::to_string(v + 1)}};
  }
};

class HalfRay final : public PresentedConnectoid {
 public:
  std::string fixture() const override { return "half-ray"; }
  bool contains(std::string_view n) const override {
    auto v = parse_integer(n);
    return v && *v >= 0;
  }
  std::string element(std::size_t i) const override { return std::to_string(i); }
  std::size_t rank(std::string_view n) const override {
    require_element(*this, n);
    return static_cast<std::size_t>(*parse_integer(n));
  }
  std::vector<std::vector<std::string>> bonds(std::string_view n) const override {
    require_element(*this, n);
    const long long v = *parse_integer(n);
    const std::string s(n);
    std::vector<std::vector<std::string>> out;
    if (v > 0) out.push_back({std::to_string(v - 1), s});
    out.push_back({s, std::to_string(v + 1)});
    return out;
  }
};

class Grid final : public PresentedConnectoid {
 public:
  static std::string name_of(long long i, long long j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  static std::optional<std::pair<long long, long long>> parse(std::string_view n) {
    if (n.size() < 5 || n.front() != '(' || n.back() != ')') return std::nullopt;
    auto inner = n.substr(1, n.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto i = parse_integer(inner.substr(0, comma));
    auto j = parse_integer(inner.substr(comma + 1));
    if (!i || !j || *i < 0 || *j < 0) return std::nullopt;
    return std::make_pair(*i, *j);
  }

  std::string fixture() const override { return "grid"; }
  bool contains(std::string_view n) const override { return parse(n).has_value(); }
  std::string element(std::size_t idx) const override {
    std::size_t d = 0;
    while ((d + 1) * (d + 2) / 2 <= idx) ++d;
    const std::size_t i = idx - d * (d + 1) / 2;
    return name_of(static_cast<long long>(i), static_cast<long long>(d - i));
  }
  std::size_t rank(std::string_view n) const override {
    require_element(*this, n);
    auto [i, j] = *parse(n);
    const auto d = static_cast<std::size_t>(i + j);
    return d * (d + 1) / 2 + static_cast<std::size_t>(i);
  }
  std::vector<std::vector<std::string>> bonds(std::string_view n) const override {
    require_element(*this, n);
    auto [i, j] = *parse(n);
    const std::string s(n);
    std::vector<std::vector<std::string>> out;
    if (i > 0) out.push_back({name_of(i - 1, j), s});
    if (j > 0) out.push_back({name_of(i, j - 1), s});
    out.push_back({s, name_of(i + 1, j)});
    out.push_back({s, name_of(i, j + 1)});
    return out;
  }
};

class BinaryTree final : public PresentedConnectoid {
 public:
  std::string fixture() const override { return "binary-tree"; }
  bool contains(std::string_view n) const override {
    return !n.empty() && n.front() == 'r' && n.size() <= 63 &&
           std::all_of(n.begin() + 1, n.end(), [](char c) { return c == '0' || c == '1'; });
  }
  std::string element(std::size_t idx) const override {
    std::size_t len = 0;
    while ((std::size_t{2} << len) - 1 <= idx) ++len;
    const std::size_t value = idx + 1 - (std::size_t{1} << len);
    std::string out = "r";
    for (std::size_t b = len; b-- > 0;) out += (value >> b & 1) ? '1' : '0';
    return out;
  }
  std::size_t rank(std::string_view n) const override {
    require_element(*this, n);
    const std::size_t len = n.size() - 1;
    std::size_t value = 0;
    for (std::size_t b = 1; b < n.size(); ++b) value = value * 2 + (n[b] == '1');
    return (std::size_t{1} << len) - 1 + value;
  }
  std::vector<std::vector<std::string>> bonds(std::string_view n) const override {
    require_element(*this, n);
    const std::string s(n);
    std::vector<std::vector<std::string>> out;
    if (s.size() > 1) out.push_back({s.substr(0, s.size() - 1), s});
    out.push_back({s, s + "0"});
    out.push_back({s, s + "1"});
    return out;
  }
};

}  // namespace

std::shared_ptr<const PresentedConnectoid> make_presented(std::string_view name) {
  if (name == "double-ray") return std::make_shared<DoubleRay>();
  if (name == "half-ray") return std::make_shared<HalfRay>();
  if (name == "grid") return std::make_shared<Grid>();
  if (name == "binary-tree") return std::make_shared<BinaryTree>();
  fail(ErrorKind::kMalformedInput, "unknown presented fixture '" + std::string(name) + "'");
}

std::vector<std::string> presented_fixture_names() {
  return {"binary-tree", "double-ray", "grid", "half-ray"};
}

IdSet Window::ball(std::size_t r) const {
  IdSet out = connectoid.empty_set();
  for (Id i = 0; i < distance.size(); ++i)
    if (distance[i] <= r) out.set(i);
  return out;
}

std::vector<Id> Window::by_rank() const {
  std::vector<Id> ids(connectoid.universe());
  for (Id i = 0; i < ids.size(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(), [&](Id a, Id b) { return rank[a] < rank[b]; });
  return ids;
}

Window explore(std::shared_ptr<const PresentedConnectoid> source, const std::vector<std::string>& seeds,
               std::size_t radius, std::size_t budget) {
  if (seeds.empty()) fail(ErrorKind::kMalformedInput, "exploration needs at least one seed");
  StepBudget steps(budget, ErrorKind::kDepthExhausted);
  std::unordered_map<std::string, std::size_t> dist;
  std::unordered_map<std::string, std::vector<std::vector<std::string>>> bonds;
  std::deque<std::string> queue;
  for (const auto& s : seeds) {
    require_element(*source, s);
    if (dist.emplace(s, 0).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    auto& own = bonds[v] = source->bonds(v);
    steps.charge(own.size() + 1);
    const std::size_t d = dist[v];
    if (d == radius) continue;
    for (const auto& b : own) {
      for (const auto& w : b) {
        if (dist.emplace(w, d + 1).second) queue.push_back(w);
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(dist.size());
  for (const auto& [n, d] : dist) names.push_back(n);
  std::sort(names.begin(), names.end());

  Window w;
  w.source = source;
  w.radius = radius;
  std::set<std::vector<std::string>> inside;
  std::vector<char> leaves(names.size(), 0);
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (auto b : bonds[names[i]]) {
      if (std::all_of(b.begin(), b.end(), [&](const std::string& e) { return dist.contains(e); })) {
        std::sort(b.begin(), b.end());
        inside.insert(std::move(b));
      } else {
        leaves[i] = 1;
      }
    }
  }
  w.connectoid = Connectoid::from_bonds(names, {inside.begin(), inside.end()});
  w.distance.resize(names.size());
  w.rank.resize(names.size());
  w.frontier = w.connectoid.empty_set();
  for (Id i = 0; i < names.size(); ++i) {
    w.distance[i] = dist[names[i]];
    w.rank[i] = source->rank(names[i]);
    if (leaves[i]) w.frontier.set(i);
  }
  return w;
}

std::optional<std::size_t> presented_distance(const PresentedConnectoid& source, const std::string& a,
                                              const std::string& b, std::size_t limit) {
  require_element(source, a);
  require_element(source, b);
  std::unordered_map<std::string, std::size_t> dist{{a, 0}};
  std::deque<std::string> queue{a};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    if (v == b) return dist[v];
    const std::size_t d = dist[v];
    if (d == limit) continue;
    for (const auto& bond : source.bonds(v))
      for (const auto& w : bond)
        if (dist.emplace(w, d + 1).second) queue.push_back(w);
  }
  return std::nullopt;
}

Instance::Instance(Connectoid finite) : finite_(std::make_shared<const Connectoid>(std::move(finite))) {}

Instance::Instance(std::shared_ptr<const PresentedConnectoid> presented) : presented_(std::move(presented)) {
  if (!presented_) fail(ErrorKind::kMalformedInput, "null presented connectoid");
}

const Connectoid& Instance::finite() const {
  if (!finite_) fail(ErrorKind::kPreconditionViolated, "operation needs a finite instance");
  return *finite_;
}

std::string Instance::origin() const {
  if (presented_) return presented_->origin();
  if (finite_->size() == 0) fail(ErrorKind::kMalformedInput, "empty ground set");
  return finite_->name(first_of(finite_->ground()));
}

bool Instance::contains(std::string_view name) const {
  return presented_ ? presented_->contains(name) : finite_->find(name).has_value();
}

Window Instance::view(const std::vector<std::string>& seeds, std::size_t radius, std::size_t budget) const {
  if (presented_) return explore(presented_, seeds, radius, budget);
  const Connectoid& k = *finite_;
  Window w;
  w.connectoid = k;
  w.radius = radius;
  w.frontier = k.empty_set();
  const std::size_t far = static_cast<std::size_t>(-1);
  w.distance.assign(k.universe(), far);
  w.rank.resize(k.universe());
  for (Id i = 0; i < k.universe(); ++i) w.rank[i] = i;
  std::deque<Id> queue;
  for (const auto& s : seeds) {
    const Id id = k.id(s);
    if (w.distance[id] == far) {
      w.distance[id] = 0;
      queue.push_back(id);
    }
  }
  while (!queue.empty()) {
    const Id v = queue.front();
    queue.pop_front();
    for (auto gi : k.generators_at(v)) {
      for (Id y : k.generator_members(gi)) {
        if (w.distance[y] == far) {
          w.distance[y] = w.distance[v] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return w;
}

}  // namespace connectoid
