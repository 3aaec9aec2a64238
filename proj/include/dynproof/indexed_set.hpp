#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dynproof {

// Insertion-ordered set with hashed membership. Iteration yields elements in
// the order they were first inserted.
template <class T, class Hash = std::hash<T>>
class IndexedSet {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  IndexedSet() = default;
  IndexedSet(std::initializer_list<T> items) {
    for (const auto& item : items) insert(item);
  }
  template <class It>
  IndexedSet(It first, It last) {
    for (; first != last; ++first) insert(*first);
  }

  // Returns false if an equal element is already present.
  bool insert(T item) {
    const std::size_t h = Hash{}(item);
    if (find(item, h) != npos) return false;
    index_.emplace(h, items_.size());
    items_.push_back(std::move(item));
    return true;
  }

  bool contains(const T& item) const { return find(item, Hash{}(item)) != npos; }

  bool erase(const T& item) {
    const std::size_t pos = find(item, Hash{}(item));
    if (pos == npos) return false;
    items_.erase(items_.begin() + static_cast<std::ptrdiff_t>(pos));
    reindex();
    return true;
  }

  // Replaces the element at `pos` by `replacements` (in order, skipping ones
  // already present elsewhere); later elements keep their relative order.
  template <class Range>
  void replace_at(std::size_t pos, const Range& replacements) {
    std::vector<T> next;
    next.reserve(items_.size() + std::size(replacements));
    for (std::size_t i = 0; i < pos; ++i) next.push_back(items_[i]);
    std::vector<T> tail(items_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, items_.end());
    items_.clear();
    index_.clear();
    for (auto& item : next) insert(std::move(item));
    for (const auto& item : replacements) insert(item);
    for (auto& item : tail) insert(std::move(item));
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::vector<T>& items() const { return items_; }

  // Set equality, independent of insertion order.
  friend bool operator==(const IndexedSet& a, const IndexedSet& b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.begin(), a.end(), [&](const T& x) { return b.contains(x); });
  }

  bool subset_of(const IndexedSet& other) const {
    return std::all_of(begin(), end(), [&](const T& x) { return other.contains(x); });
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t find(const T& item, std::size_t h) const {
    auto [first, last] = index_.equal_range(h);
    for (; first != last; ++first) {
      if (items_[first->second] == item) return first->second;
    }
    return npos;
  }

  void reindex() {
    index_.clear();
    for (std::size_t i = 0; i < items_.size(); ++i) index_.emplace(Hash{}(items_[i]), i);
  }

  std::vector<T> items_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

template <class T, class H>
IndexedSet<T, H> set_union(IndexedSet<T, H> a, const IndexedSet<T, H>& b) {
  for (const auto& x : b) a.insert(x);
  return a;
}

template <class T, class H>
IndexedSet<T, H> set_difference(const IndexedSet<T, H>& a, const IndexedSet<T, H>& b) {
  IndexedSet<T, H> out;
  for (const auto& x : a) {
    if (!b.contains(x)) out.insert(x);
  }
  return out;
}

}  // namespace dynproof
