#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ramsey/clique.hpp"
#include "ramsey/coloring.hpp"

namespace ramsey {

/// t distinct vertices, ascending, all of whose pairs have colour `color`.
struct MonoWitness {
  int color = 0;
  std::vector<Vertex> vertices;

  friend bool operator==(const MonoWitness&, const MonoWitness&) = default;
};

inline constexpr std::uint64_t kExhaustiveVertexLimit = 10'000;

struct MonoSearchOptions {
  int threads = 1;
  /// Colours to search; 0 means "through ell".
  int first_color = 1;
  int last_color = 0;
  /// Above this N the search samples random t-sets and is never exhaustive.
  std::uint64_t exhaustive_limit = kExhaustiveVertexLimit;
  std::uint64_t samples = 1'000'000;
  std::uint64_t node_budget = kUnlimitedNodes;
};

struct MonoSearchResult {
  std::optional<MonoWitness> witness;
  bool exhaustive = false;
  /// Clique-search nodes over the colour classes up to and including the
  /// witness colour (all searched classes when there is none).
  std::uint64_t nodes = 0;
};

using PairColorFn = std::function<int(Vertex, Vertex)>;

/// Searches colour classes in ascending order for a t-clique; the witness is
/// the lexicographically first t-clique of the lowest colour that has one.
/// Colour classes may be searched on several threads; the result does not
/// depend on the thread count.
MonoSearchResult find_mono_clique(const EdgeColoring& c, int t,
                                  const MonoSearchOptions& options = {});

/// Same for an arbitrary colouring of K_n given as a pair function.
MonoSearchResult find_mono_clique(std::uint64_t n, int ell, const PairColorFn& color, int t,
                                  const MonoSearchOptions& options = {});

/// True iff the witness has t distinct in-range vertices and every pair has
/// its colour.
bool is_mono_witness(const EdgeColoring& c, const MonoWitness& w, int t);

}  // namespace ramsey
