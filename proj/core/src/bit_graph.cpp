#include "ramsey/bit_graph.hpp"

#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

BitGraph::BitGraph(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {
  if (n > (std::size_t{1} << 32)) throw InputError("graph exceeds vertex capacity");
}

BitGraph BitGraph::complete(std::size_t n) {
  BitGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

BitGraph BitGraph::from_edges(std::size_t n,
                              std::span<const std::pair<Vertex, Vertex>> edges) {
  BitGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void BitGraph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) {
    throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") out of range for n=" + std::to_string(n_));
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t BitGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::uint64_t BitGraph::edge_count() const {
  std::uint64_t twice = 0;
  for (auto w : rows_) twice += static_cast<std::uint64_t>(std::popcount(w));
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> BitGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    auto r = row(u);
    for (std::size_t w = (u + 1) / 64; w < words_; ++w) {
      std::uint64_t bits = r[w];
      if (w == (u + 1) / 64) bits &= ~std::uint64_t{0} << ((u + 1) & 63);
      while (bits != 0) {
        const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        out.emplace_back(u, v);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

void BitGraph::set_labels(std::vector<BitVector> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw InputError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

BitGraph build_g0(int t) {
  VectorSet v = enumerate_even_weight(t);
  const std::size_t n = v.size();
  BitGraph g(n);
  for (Vertex a = 0; a < n; ++a) {
    const std::uint64_t ea = v[a].encoding();
    for (Vertex b = a + 1; b < n; ++b) {
      if (std::popcount(ea & v[b].encoding()) & 1) g.add_edge(a, b);
    }
  }
  g.set_labels({v.begin(), v.end()});
  return g;
}

}  // namespace ramsey
