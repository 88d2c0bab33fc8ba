#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ramsey/bit_graph.hpp"

namespace ramsey {

enum class ColoringKind { kBlowup, kErdos, kProduct };

std::string to_string(ColoringKind kind);
ColoringKind parse_coloring_kind(const std::string& text);

/// Parameters that fully determine an edge colouring of K_N.
///  - blowup: m random blowups of G0(t) plus two leftover colours; ell = m + 2.
///  - erdos: every pair uniform on 1..ell.
///  - product: Lefmann product of `factors[0]` and `factors[1]`; N = N1 * N2,
///    ell = ell1 + ell2. Factor seeds are shifted by this spec's seed.
/// `t` is the clique target the colouring is meant to avoid.
struct ColoringSpec {
  ColoringKind kind = ColoringKind::kBlowup;
  int t = 0;
  int m = 0;
  int ell = 2;
  std::uint64_t n = 1;
  std::uint64_t seed = 0;
  std::vector<ColoringSpec> factors;

  /// Throws InputError when the parameters are inconsistent.
  void validate() const;
  ColoringSpec with_seed(std::uint64_t new_seed) const;

  friend bool operator==(const ColoringSpec&, const ColoringSpec&) = default;
};

inline constexpr std::uint64_t kVertexCapacity = std::uint64_t{1} << 32;

/// An immutable edge colouring of K_N with colours 1..ell. Nothing is stored
/// per pair: blowup colourings keep the m maps [N] -> V(G0) and derive the
/// leftover colours from the pair stream on demand.
class EdgeColoring {
 public:
  const ColoringSpec& spec() const { return spec_; }
  int colors() const { return spec_.ell; }
  std::uint64_t vertex_count() const { return spec_.n; }

  /// Colour of the pair {x, y}. Throws InputError for x == y or out of range.
  int color_of(Vertex x, Vertex y) const;

  /// Same without argument checks; x != y and both < N.
  int color_unchecked(Vertex x, Vertex y) const;

  /// The map f_i as G0 vertex indices, i in 1..m.
  std::span<const std::uint32_t> blowup_table(int i) const;

 private:
  friend EdgeColoring generate_blowup_coloring(int, int, std::uint64_t, std::uint64_t);
  friend EdgeColoring generate_erdos_coloring(std::uint64_t, int, std::uint64_t, int);
  friend EdgeColoring product_coloring(const EdgeColoring&, const EdgeColoring&);
  friend EdgeColoring build_coloring(const ColoringSpec&);

  int pair_color(Vertex lo, Vertex hi) const;

  ColoringSpec spec_;
  std::vector<std::uint32_t> tables_;  // m * N, row i-1 holds f_i
  std::shared_ptr<const EdgeColoring> left_;
  std::shared_ptr<const EdgeColoring> right_;
};

/// f_i(x) is uniform on V(G0(t)) from the stream keyed (seed, blowup, i, x).
/// The colour of {x, y} is the least i with f_i(x) ~ f_i(y) in G0, else
/// m+1 or m+2 from the stream keyed (seed, pair, min, max).
EdgeColoring generate_blowup_coloring(int t, int m, std::uint64_t n, std::uint64_t seed);

/// Uniform colours on 1..ell from the pair stream; identical pair-for-pair to
/// the m = 0 blowup colouring when ell = 2. `t` is recorded as the target.
EdgeColoring generate_erdos_coloring(std::uint64_t n, int ell, std::uint64_t seed, int t = 0);

/// Vertex x of the product is (x / N2, x % N2). Pairs differing in the first
/// coordinate take c1's colour; otherwise ell1 + c2's colour.
EdgeColoring product_coloring(const EdgeColoring& c1, const EdgeColoring& c2);

/// Regenerates the colouring a spec describes.
EdgeColoring build_coloring(const ColoringSpec& spec);

/// The graph of pairs with colour `color`.
BitGraph color_class(const EdgeColoring& c, int color);

inline constexpr std::uint64_t kMaxEdgeDumpVertices = 2000;

/// CSV `x,y,color` for all x < y. Refuses N > kMaxEdgeDumpVertices.
void write_edge_csv(std::ostream& out, const EdgeColoring& c);

}  // namespace ramsey
