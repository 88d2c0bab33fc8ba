#include "ramsey/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "bitset_ops.hpp"
#include "ramsey/graph_io.hpp"

namespace ramsey {

std::uint64_t IndependentSetCensus::total_nonempty() const {
  std::uint64_t total = 0;
  for (std::size_t k = 1; k < counts.size(); ++k) total += counts[k];
  return total;
}

std::string IndependentSetCensus::fingerprint() const {
  std::string text = std::to_string(vertex_count) + ":" + std::to_string(max_size);
  for (auto c : counts) text += "," + std::to_string(c);
  return "n" + std::to_string(vertex_count) + "-k" + std::to_string(max_size) + "-" +
         fnv1a_hex(text);
}

CensusAborted::CensusAborted(IndependentSetCensus partial, std::uint64_t nodes,
                             std::size_t roots_done, std::size_t roots_total)
    : BudgetExceeded("independent-set census exceeded its node budget after " +
                     std::to_string(nodes) + " nodes (" + std::to_string(roots_done) + "/" +
                     std::to_string(roots_total) + " root branches complete)"),
      partial_(std::move(partial)),
      nodes_(nodes),
      roots_done_(roots_done),
      roots_total_(roots_total) {}

namespace {

struct Budget {
  std::uint64_t limit;
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> exhausted{false};
};

class CensusWorker {
 public:
  CensusWorker(const BitGraph& g, int max_size, Budget& budget)
      : g_(g), words_(g.words_per_row()), max_size_(max_size), budget_(budget),
        counts_(static_cast<std::size_t>(max_size) + 1, 0),
        frames_(static_cast<std::size_t>(max_size) + 1, std::vector<std::uint64_t>(words_)) {}

  // Counts every nonempty set whose smallest vertex is `root`. Returns false
  // if the shared budget ran out.
  bool run_root(Vertex root) {
    auto& cand = frames_[1];
    std::fill(cand.begin(), cand.end(), 0);
    for (std::size_t v = root + 1; v < g_.size(); ++v) detail::set_bit(cand, v);
    auto nbrs = g_.row(root);
    for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~nbrs[w];
    try {
      visit(1, cand);
      flush();
    } catch (const Exhausted&) {
      return false;
    }
    return true;
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t local_nodes() const { return total_local_; }

 private:
  struct Exhausted {};

  void tick() {
    ++pending_;
    ++total_local_;
    if (pending_ >= 4096) flush();
  }

  void flush() {
    const std::uint64_t used = budget_.used.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (used > budget_.limit || budget_.exhausted.load(std::memory_order_relaxed)) {
      budget_.exhausted = true;
      throw Exhausted{};
    }
  }

  // `cand`: vertices greater than the last chosen and non-adjacent to all chosen.
  void visit(int size, std::span<const std::uint64_t> cand) {
    tick();
    ++counts_[static_cast<std::size_t>(size)];
    if (size == max_size_) return;
    if (size + 1 == max_size_) {
      counts_[static_cast<std::size_t>(max_size_)] += detail::count(cand);
      return;
    }
    auto& next = frames_[static_cast<std::size_t>(size) + 1];
    auto& remaining = scratch(size);
    std::copy(cand.begin(), cand.end(), remaining.begin());
    for (std::int64_t v = detail::first_bit(remaining); v >= 0;
         v = detail::first_bit(remaining, static_cast<std::size_t>(v) >> 6)) {
      detail::clear_bit(remaining, static_cast<std::size_t>(v));
      detail::andnot_into(next, remaining, g_.row(static_cast<Vertex>(v)));
      visit(size + 1, next);
    }
  }

  std::vector<std::uint64_t>& scratch(int size) {
    while (scratch_.size() <= static_cast<std::size_t>(size)) {
      scratch_.emplace_back(words_);
    }
    return scratch_[static_cast<std::size_t>(size)];
  }

  const BitGraph& g_;
  std::size_t words_;
  int max_size_;
  Budget& budget_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::vector<std::uint64_t>> frames_;
  std::vector<std::vector<std::uint64_t>> scratch_;
  std::uint64_t pending_ = 0;
  std::uint64_t total_local_ = 0;
};

}  // namespace

IndependentSetCensus count_independent_sets(const BitGraph& g, int max_size,
                                            const CensusOptions& options) {
  if (max_size < 0) throw InputError("census size cap must be non-negative");
  IndependentSetCensus census;
  census.vertex_count = g.size();
  census.max_size = max_size;
  census.counts.assign(static_cast<std::size_t>(max_size) + 1, 0);
  census.counts[0] = 1;
  if (max_size == 0 || g.size() == 0) return census;

  Budget budget{options.node_budget};
  const std::size_t roots = g.size();
  const std::size_t threads =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(options.threads, 1)), 1, roots);

  std::mutex merge_mutex;
  std::vector<bool> root_done(roots, false);
  auto work = [&](std::size_t first) {
    CensusWorker worker(g, max_size, budget);
    std::vector<std::uint64_t> merged(census.counts.size(), 0);
    std::vector<std::uint64_t> before(census.counts.size(), 0);
    for (std::size_t r = first; r < roots; r += threads) {
      before = worker.counts();
      if (!worker.run_root(static_cast<Vertex>(r))) break;
      std::lock_guard lock(merge_mutex);
      for (std::size_t k = 0; k < merged.size(); ++k) {
        census.counts[k] += worker.counts()[k] - before[k];
      }
      root_done[r] = true;
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(work, i);
  }

  if (budget.exhausted) {
    const auto done = static_cast<std::size_t>(std::count(root_done.begin(), root_done.end(), true));
    throw CensusAborted(census, budget.used.load(), done, roots);
  }
  return census;
}

bool is_independent(const BitGraph& g, std::span<const Vertex> vertices) {
  for (Vertex v : vertices) {
    if (v >= g.size()) {
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(g.size()));
    }
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] != vertices[j] && g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

}  // namespace ramsey
