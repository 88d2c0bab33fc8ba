#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/bit_graph.hpp"

namespace ramsey {

inline constexpr std::uint64_t kUnlimitedNodes = std::numeric_limits<std::uint64_t>::max();

struct MaxCliqueResult {
  int size = 0;
  /// Lexicographically first maximum clique, ascending.
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
};

struct CliqueQuery {
  bool found = false;
  /// Lexicographically first k-clique when found, ascending.
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
};

/// Exact maximum clique by branch and bound. Candidates are scanned in
/// ascending index order and pruned by greedy-colouring bounds.
MaxCliqueResult max_clique(const BitGraph& g);

/// Decides whether g contains a k-clique, stopping at the first witness.
/// Throws BudgetExceeded when more than `node_budget` search nodes are needed.
CliqueQuery has_clique_of_order(const BitGraph& g, int k,
                                std::uint64_t node_budget = kUnlimitedNodes);

/// Calls `visit` with every maximal clique (ascending vertex lists).
/// Bron-Kerbosch with Tomita pivoting.
void for_each_maximal_clique(const BitGraph& g,
                             const std::function<void(std::span<const Vertex>)>& visit);

bool is_clique(const BitGraph& g, std::span<const Vertex> vertices);

}  // namespace ramsey
