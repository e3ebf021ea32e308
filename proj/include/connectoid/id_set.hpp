#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace connectoid {

/// Dense element index. Within one connectoid the index order coincides with
/// the canonical (lexicographic) order of element names.
using Id = std::uint32_t;
inline constexpr Id kNoId = ~Id{0};

using IdSet = boost::dynamic_bitset<std::uint64_t>;

inline IdSet make_set(std::size_t universe, std::initializer_list<Id> ids) {
  IdSet s(universe);
  for (Id i : ids) s.set(i);
  return s;
}

inline IdSet make_set(std::size_t universe, const std::vector<Id>& ids) {
  IdSet s(universe);
  for (Id i : ids) s.set(i);
  return s;
}

inline IdSet singleton(std::size_t universe, Id id) {
  IdSet s(universe);
  s.set(id);
  return s;
}

inline Id first_of(const IdSet& s) {
  auto pos = s.find_first();
  return pos == IdSet::npos ? kNoId : static_cast<Id>(pos);
}

inline std::vector<Id> to_ids(const IdSet& s) {
  std::vector<Id> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != IdSet::npos; i = s.find_next(i)) out.push_back(static_cast<Id>(i));
  return out;
}

template <typename Fn>
void for_each_id(const IdSet& s, Fn&& fn) {
  for (auto i = s.find_first(); i != IdSet::npos; i = s.find_next(i)) fn(static_cast<Id>(i));
}

/// Canonical set order: smaller sets first, then lexicographic on sorted ids.
inline bool canonical_less(const IdSet& a, const IdSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != IdSet::npos && j != IdSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

struct CanonicalLess {
  bool operator()(const IdSet& a, const IdSet& b) const { return canonical_less(a, b); }
};

/// Calls `fn` on every subset of `pool` with at most `max_size` elements,
/// smallest first and lexicographic within a size. Stops early when `fn`
/// returns false; returns false in that case.
template <typename Fn>
bool for_each_subset_up_to(std::size_t universe, const std::vector<Id>& pool, std::size_t max_size,
                           Fn&& fn) {
  const std::size_t m = pool.size();
  if (max_size > m) max_size = m;
  for (std::size_t size = 0; size <= max_size; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      IdSet s(universe);
      for (auto i : idx) s.set(pool[i]);
      if (!fn(s)) return false;
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == m - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

struct IdSetHash {
  std::size_t operator()(const IdSet& s) const {
    std::size_t h = s.size();
    for_each_id(s, [&](Id i) { h = h * 1'000'003u ^ (i + 0x9e3779b9u); });
    return h;
  }
};

}  // namespace connectoid
