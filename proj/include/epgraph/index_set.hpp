#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace epg {

// Fixed-universe bitset used for subgroup member sets and vertex sets.
// Indices are element/vertex numbers in [0, universe).
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(int universe) {
    IndexSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  static IndexSet of(int universe, const std::vector<int>& members) {
    IndexSet s(universe);
    for (int i : members) s.insert(i);
    return s;
  }

  int universe() const { return universe_; }

  void insert(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void erase(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  bool contains(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int size() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_) {
      if (w) return false;
    }
    return true;
  }

  bool is_subset_of(const IndexSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  IndexSet operator&(const IndexSet& other) const {
    IndexSet r(universe_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  IndexSet operator|(const IndexSet& other) const {
    IndexSet r(universe_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
    return r;
  }

  bool operator==(const IndexSet& other) const {
    return universe_ == other.universe_ && words_ == other.words_;
  }
  bool operator!=(const IndexSet& other) const { return !(*this == other); }

  // Lexicographic order on the ascending member sequence: the set owning the
  // smallest differing index sorts first, so {0,1,2} < {0,2} < {1}.
  bool operator<(const IndexSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t diff = words_[i] ^ other.words_[i];
      if (diff) {
        uint64_t lowest = diff & (~diff + 1);
        return words_[i] & lowest;
      }
    }
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int i = 0; i < universe_; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

 private:
  int universe_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace epg
