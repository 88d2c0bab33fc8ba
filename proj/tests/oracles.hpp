#pragma once

// Brute-force reference computations for the tests. These work on plain
// integers and boolean matrices and share no code with the library's search
// kernels.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace ramsey::oracle {

using Matrix = std::vector<std::vector<bool>>;

/// Even-weight vectors of F_2^t as integers, ascending.
inline std::vector<std::uint64_t> even_weight(int t) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << t); ++e) {
    if (std::popcount(e) % 2 == 0) out.push_back(e);
  }
  return out;
}

inline int dot(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) % 2; }

/// Pairwise-dot-product adjacency of G0(t).
inline Matrix g0_matrix(int t) {
  const auto v = even_weight(t);
  Matrix m(v.size(), std::vector<bool>(v.size(), false));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = i != j && dot(v[i], v[j]) == 1;
  }
  return m;
}

inline std::uint64_t edge_count(const Matrix& m) {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) e += m[i][j];
  }
  return e;
}

/// Whether the vertex subset `mask` (n <= 32) is a clique / independent set.
inline bool subset_is_clique(const Matrix& m, std::uint64_t mask) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (((mask >> j) & 1) && !m[i][j]) return false;
    }
  }
  return true;
}

inline bool subset_is_independent(const Matrix& m, std::uint64_t mask) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (((mask >> j) & 1) && m[i][j]) return false;
    }
  }
  return true;
}

/// Clique number by checking all 2^n subsets (n <= 24).
inline int max_clique_brute(const Matrix& m) {
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
    const int size = std::popcount(mask);
    if (size > best && subset_is_clique(m, mask)) best = size;
  }
  return best;
}

/// Independent sets by size over all 2^n subsets (n <= 24); index = size.
inline std::vector<std::uint64_t> census_brute(const Matrix& m) {
  std::vector<std::uint64_t> counts(m.size() + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
    if (subset_is_independent(m, mask)) ++counts[static_cast<std::size_t>(std::popcount(mask))];
  }
  return counts;
}

/// Rank over F_2 by looking for the largest subset with no vanishing
/// nonempty sub-sum (|vectors| <= 12).
inline int rank_brute(const std::vector<std::uint64_t>& vectors) {
  const std::size_t n = vectors.size();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint64_t sub = mask; sub != 0 && independent; sub = (sub - 1) & mask) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((sub >> i) & 1) sum ^= vectors[i];
      }
      independent = sum != 0;
    }
    if (independent) best = size;
  }
  return best;
}

/// Surjections [t] -> [k] by enumerating all k^t functions.
inline std::uint64_t surjections_brute(int t, int k) {
  std::uint64_t total = 1;
  for (int i = 0; i < t; ++i) total *= static_cast<std::uint64_t>(k);
  std::uint64_t onto = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t hit = 0, c = code;
    for (int i = 0; i < t; ++i) {
      hit |= std::uint64_t{1} << (c % static_cast<std::uint64_t>(k));
      c /= static_cast<std::uint64_t>(k);
    }
    if (std::popcount(hit) == k) ++onto;
  }
  return onto;
}

/// Number of t-tuples over the vertices of m whose image is independent.
inline std::uint64_t independent_tuples_brute(const Matrix& m, int t) {
  const std::uint64_t n = m.size();
  std::uint64_t total = 1;
  for (int i = 0; i < t; ++i) total *= n;
  std::uint64_t good = 0;
  std::vector<std::size_t> tuple(static_cast<std::size_t>(t));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& x : tuple) {
      x = c % n;
      c /= n;
    }
    bool ok = true;
    for (std::size_t i = 0; i < tuple.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < tuple.size() && ok; ++j) ok = !m[tuple[i]][tuple[j]];
    }
    good += ok;
  }
  return good;
}

// Monte Carlo estimate of Pr[image of a uniform t-tuple is independent].
inline double monte_carlo_p_ind(int t, std::uint64_t samples, std::uint64_t seed) {
  const auto m = g0_matrix(t);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
  std::uint64_t good = 0;
  std::vector<std::size_t> tuple(static_cast<std::size_t>(t));
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& x : tuple) x = pick(rng);
    bool ok = true;
    for (std::size_t i = 0; i < tuple.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < tuple.size() && ok; ++j) ok = !m[tuple[i]][tuple[j]];
    }
    good += ok;
  }
  return static_cast<double>(good) / static_cast<double>(samples);
}

}  // namespace ramsey::oracle
