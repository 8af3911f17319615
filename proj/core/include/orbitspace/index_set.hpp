#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace orbitspace {

/// Fixed-universe bit set over element indices [0, universe).
///
/// Node sets, block sets and relation rows are all small (tens to a few
/// thousand elements), so a dense word vector is both simple and fast.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe);
  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static IndexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  void insert(std::size_t i);
  void erase(std::size_t i);
  bool contains(std::size_t i) const;

  bool empty() const;
  std::size_t count() const;

  bool intersects(const IndexSet& other) const;
  bool is_subset_of(const IndexSet& other) const;

  IndexSet& operator|=(const IndexSet& other);
  IndexSet& operator&=(const IndexSet& other);
  /// Set difference.
  IndexSet& operator-=(const IndexSet& other);

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  bool operator==(const IndexSet& other) const = default;
  /// Total order (by universe, then word-wise); lets sets key ordered maps.
  bool operator<(const IndexSet& other) const;

  /// Members in increasing order.
  std::vector<std::size_t> members() const;

  /// Smallest member, or universe() if empty.
  std::size_t first() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace orbitspace
