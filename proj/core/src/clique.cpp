#include "ramsey/clique.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "bitset_ops.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Depth-first search over cliques listed in ascending vertex order. At each
// node the candidate set is greedily coloured; the largest colour among the
// candidates >= v bounds any extension through v. Because the scan order is
// ascending and pruning only discards branches that cannot beat `best`, the
// first clique of a given size to be recorded is the lexicographically
// smallest one.
class AscendingCliqueSearch {
 public:
  AscendingCliqueSearch(const BitGraph& g, int target, std::uint64_t budget)
      : g_(g), words_(g.words_per_row()), target_(target), budget_(budget),
        colour_(g.size(), 0) {
    best_ = target > 0 ? target - 1 : 0;
  }

  void run() {
    if (g_.size() == 0) return;
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t v = 0; v < g_.size(); ++v) detail::set_bit(all, v);
    expand(0, all);
  }

  int best() const { return best_; }
  const std::vector<Vertex>& best_clique() const { return best_clique_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Frame {
    std::vector<std::uint64_t> remaining;
    std::vector<std::uint64_t> next;
    std::vector<Vertex> order;
    std::vector<int> bound;
  };

  Frame& frame(std::size_t depth) {
    while (frames_.size() <= depth) {
      frames_.push_back(Frame{std::vector<std::uint64_t>(words_),
                              std::vector<std::uint64_t>(words_), {}, {}});
    }
    return frames_[depth];
  }

  // Fills order (ascending members of p) and bound (suffix maximum colour).
  void colour_bounds(std::span<const std::uint64_t> p, Frame& f) {
    uncoloured_.assign(p.begin(), p.end());
    queue_.resize(words_);
    int colour = 0;
    while (detail::any(uncoloured_)) {
      ++colour;
      queue_ = uncoloured_;
      // High indices first so that late suffixes see few colours.
      for (std::int64_t v = detail::last_bit(queue_); v >= 0; v = detail::last_bit(queue_)) {
        colour_[static_cast<std::size_t>(v)] = colour;
        detail::clear_bit(uncoloured_, static_cast<std::size_t>(v));
        detail::clear_bit(queue_, static_cast<std::size_t>(v));
        auto nbrs = g_.row(static_cast<Vertex>(v));
        for (std::size_t w = 0; w < words_; ++w) queue_[w] &= ~nbrs[w];
      }
    }
    f.order.clear();
    detail::for_each_bit(p, [&](std::size_t v) { f.order.push_back(static_cast<Vertex>(v)); });
    f.bound.resize(f.order.size());
    int running = 0;
    for (std::size_t i = f.order.size(); i-- > 0;) {
      running = std::max(running, colour_[f.order[i]]);
      f.bound[i] = running;
    }
  }

  void expand(std::size_t depth, std::span<const std::uint64_t> p) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("clique search exceeded node budget of " + std::to_string(budget_));
    }
    Frame& f = frame(depth);
    colour_bounds(p, f);
    std::copy(p.begin(), p.end(), f.remaining.begin());
    for (std::size_t i = 0; i < f.order.size(); ++i) {
      if (static_cast<int>(depth) + f.bound[i] <= best_) return;
      const Vertex v = f.order[i];
      detail::clear_bit(f.remaining, v);
      detail::and_into(f.next, f.remaining, g_.row(v));
      current_.push_back(v);
      if (static_cast<int>(current_.size()) > best_) {
        best_ = static_cast<int>(current_.size());
        best_clique_ = current_;
        if (target_ > 0 && best_ >= target_) {
          done_ = true;
          return;
        }
      }
      if (detail::any(f.next)) {
        expand(depth + 1, f.next);
        if (done_) return;
      }
      current_.pop_back();
    }
  }


  const BitGraph& g_;
  std::size_t words_;
  int target_;
  std::uint64_t budget_;
  std::vector<int> colour_;
  std::vector<std::uint64_t> uncoloured_;
  std::vector<std::uint64_t> queue_;
  std::deque<Frame> frames_;  // stable references across push_back
  std::vector<Vertex> current_;
  std::vector<Vertex> best_clique_;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
};

}  // namespace

MaxCliqueResult max_clique(const BitGraph& g) {
  MaxCliqueResult result;
  if (g.size() == 0) return result;
  AscendingCliqueSearch search(g, 0, kUnlimitedNodes);
  search.run();
  result.size = search.best();
  result.nodes = search.nodes();
  // Bounds tighten as `best` grows, so the clique recorded above need not be
  // the lexicographically first of its size; the decision search is.
  CliqueQuery q = has_clique_of_order(g, result.size);
  result.witness = std::move(q.witness);
  result.nodes += q.nodes;
  return result;
}

CliqueQuery has_clique_of_order(const BitGraph& g, int k, std::uint64_t node_budget) {
  CliqueQuery q;
  if (k < 0) throw InputError("clique order must be non-negative");
  if (k == 0) {
    q.found = true;
    return q;
  }
  if (static_cast<std::size_t>(k) > g.size()) return q;
  AscendingCliqueSearch search(g, k, node_budget);
  search.run();
  q.nodes = search.nodes();
  if (static_cast<int>(search.best_clique().size()) >= k) {
    q.found = true;
    q.witness = search.best_clique();
  }
  return q;
}

namespace {

void bron_kerbosch(const BitGraph& g, std::vector<Vertex>& r, std::vector<std::uint64_t> p,
                   std::vector<std::uint64_t> x,
                   const std::function<void(std::span<const Vertex>)>& visit) {
  const std::size_t words = g.words_per_row();
  if (!detail::any(p)) {
    if (!detail::any(x)) {
      std::vector<Vertex> sorted = r;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
    }
    return;
  }
  // Pivot maximizing |P ∩ N(u)|; lowest index on ties.
  std::size_t pivot = 0;
  std::size_t pivot_hits = 0;
  bool have_pivot = false;
  auto consider = [&](std::size_t u) {
    auto nbrs = g.row(static_cast<Vertex>(u));
    std::size_t hits = 0;
    for (std::size_t w = 0; w < words; ++w) {
      hits += static_cast<std::size_t>(std::popcount(p[w] & nbrs[w]));
    }
    if (!have_pivot || hits > pivot_hits) {
      pivot = u;
      pivot_hits = hits;
      have_pivot = true;
    }
  };
  detail::for_each_bit(p, consider);
  detail::for_each_bit(x, consider);

  std::vector<std::uint64_t> branch(words);
  detail::andnot_into(branch, p, g.row(static_cast<Vertex>(pivot)));
  std::vector<Vertex> branch_vertices;
  detail::for_each_bit(branch, [&](std::size_t v) {
    branch_vertices.push_back(static_cast<Vertex>(v));
  });
  std::vector<std::uint64_t> np(words), nx(words);
  for (Vertex v : branch_vertices) {
    auto nbrs = g.row(v);
    detail::and_into(np, p, nbrs);
    detail::and_into(nx, x, nbrs);
    r.push_back(v);
    bron_kerbosch(g, r, np, nx, visit);
    r.pop_back();
    detail::clear_bit(p, v);
    detail::set_bit(x, v);
  }
}

}  // namespace

void for_each_maximal_clique(const BitGraph& g,
                             const std::function<void(std::span<const Vertex>)>& visit) {
  if (g.size() == 0) return;
  std::vector<std::uint64_t> p(g.words_per_row(), 0);
  std::vector<std::uint64_t> x(g.words_per_row(), 0);
  for (std::size_t v = 0; v < g.size(); ++v) detail::set_bit(p, v);
  std::vector<Vertex> r;
  bron_kerbosch(g, r, std::move(p), std::move(x), visit);
}

bool is_clique(const BitGraph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.size()) throw InputError("vertex out of range");
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

}  // namespace ramsey
