#include "orbitspace/index_set.hpp"

#include <bit>
#include <cassert>

namespace orbitspace {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t universe) {
  return (universe + kWordBits - 1) / kWordBits;
}
}  // namespace

IndexSet::IndexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

IndexSet::IndexSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : IndexSet(universe) {
  for (std::size_t m : members) insert(m);
}

IndexSet IndexSet::full(std::size_t universe) {
  IndexSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

void IndexSet::insert(std::size_t i) {
  assert(i < universe_);
  words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void IndexSet::erase(std::size_t i) {
  assert(i < universe_);
  words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

bool IndexSet::contains(std::size_t i) const {
  if (i >= universe_) return false;
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

bool IndexSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t IndexSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool IndexSet::intersects(const IndexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & other.words_[k]) return true;
  return false;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~other.words_[k]) return false;
  return true;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

IndexSet& IndexSet::operator&=(const IndexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

IndexSet& IndexSet::operator-=(const IndexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  return *this;
}

bool IndexSet::operator<(const IndexSet& other) const {
  if (universe_ != other.universe_) return universe_ < other.universe_;
  return words_ < other.words_;
}

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(k * kWordBits + static_cast<std::size_t>(bit));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t IndexSet::first() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0)
      return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return universe_;
}

}  // namespace orbitspace
