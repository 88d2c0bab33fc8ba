#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ramsey/bit_graph.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

/// Counts of independent sets by exact size, counts[k] for 0 <= k <= max_size.
/// counts[0] is 1 (the empty set); totals are reported with and without it.
struct IndependentSetCensus {
  std::size_t vertex_count = 0;
  int max_size = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t count(int k) const {
    return k >= 0 && k <= max_size ? counts[static_cast<std::size_t>(k)] : 0;
  }
  std::uint64_t total_nonempty() const;
  std::uint64_t total_with_empty() const { return total_nonempty() + count(0); }

  /// Short stable digest of (vertex_count, max_size, counts), e.g. "n8-k4-1b2f...".
  std::string fingerprint() const;

  friend bool operator==(const IndependentSetCensus&, const IndependentSetCensus&) = default;
};

inline constexpr std::uint64_t kDefaultCensusNodeBudget = 1'000'000'000;

struct CensusOptions {
  std::uint64_t node_budget = kDefaultCensusNodeBudget;
  int threads = 1;
};

/// Thrown when the census needs more nodes than budgeted. Carries the counts
/// accumulated by the root branches that finished.
class CensusAborted : public BudgetExceeded {
 public:
  CensusAborted(IndependentSetCensus partial, std::uint64_t nodes, std::size_t roots_done,
                std::size_t roots_total);

  const IndependentSetCensus& partial() const { return partial_; }
  std::uint64_t nodes() const { return nodes_; }
  std::size_t roots_done() const { return roots_done_; }
  std::size_t roots_total() const { return roots_total_; }

 private:
  IndependentSetCensus partial_;
  std::uint64_t nodes_;
  std::size_t roots_done_;
  std::size_t roots_total_;
};

/// Exact census of independent sets of size <= max_size. Depth-first
/// extension over ascending vertex indices with candidate-mask pruning; each
/// set is visited once as a sorted list. Root branches may run on several
/// threads; counts do not depend on the thread count.
IndependentSetCensus count_independent_sets(const BitGraph& g, int max_size,
                                            const CensusOptions& options = {});

/// True iff no two distinct listed vertices are adjacent. Repeats are allowed.
bool is_independent(const BitGraph& g, std::span<const Vertex> vertices);

}  // namespace ramsey
