#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "epgraph/index_set.hpp"

namespace epg {

// Simple undirected graph with a dense bit-matrix adjacency. Row i holds the
// neighbourhood of vertex i packed into 64-bit words; the diagonal is false.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

  int vertex_count() const { return n_; }
  int words_per_row() const { return words_; }

  bool adjacent(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1;
  }

  void add_edge(int i, int j) {
    if (i == j) return;
    row(i)[j >> 6] |= (uint64_t{1} << (j & 63));
    row(j)[i >> 6] |= (uint64_t{1} << (i & 63));
  }

  int degree(int i) const {
    int c = 0;
    const uint64_t* r = row(i);
    for (int w = 0; w < words_; ++w) c += std::popcount(r[w]);
    return c;
  }

  int common_neighbor_count(int i, int j) const {
    int c = 0;
    const uint64_t* ri = row(i);
    const uint64_t* rj = row(j);
    for (int w = 0; w < words_; ++w) c += std::popcount(ri[w] & rj[w]);
    return c;
  }

  long long edge_count() const {
    long long total = 0;
    for (int i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
  }

  // Edge list with i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (adjacent(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

  bool is_complete() const {
    for (int i = 0; i < n_; ++i) {
      if (degree(i) != n_ - 1) return false;
    }
    return true;
  }

  const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }

  // Adjacency equality; labels are presentation data, not identity.
  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  // Optional per-vertex display labels (element index, order, ...).
  std::vector<std::string> labels;

 private:
  uint64_t* row(int i) { return bits_.data() + static_cast<size_t>(i) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

}  // namespace epg
