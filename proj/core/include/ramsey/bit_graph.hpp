#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ramsey/gf2.hpp"

namespace ramsey {

using Vertex = std::uint32_t;

/// Undirected simple graph stored as one adjacency bit row per vertex.
/// Symmetric, loop-free. Optionally carries a label per vertex (G0 does).
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(std::size_t n);

  static BitGraph complete(std::size_t n);
  static BitGraph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + v * words_, words_};
  }

  std::size_t degree(Vertex v) const;
  std::uint64_t edge_count() const;

  /// Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<BitVector>& labels() const { return labels_; }
  void set_labels(std::vector<BitVector> labels);

  friend bool operator==(const BitGraph& a, const BitGraph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<BitVector> labels_;
};

/// G0(t): even-weight vectors of F_2^t, adjacent iff their scalar product is 1.
/// Vertex k carries the k-th even-weight vector in ascending encoding order.
BitGraph build_g0(int t);

}  // namespace ramsey
