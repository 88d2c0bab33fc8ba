#include "ramsey/mono_search.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "ramsey/errors.hpp"
#include "ramsey/stream.hpp"

namespace ramsey {

namespace {

BitGraph materialize(std::uint64_t n, const PairColorFn& color, int wanted) {
  BitGraph g(static_cast<std::size_t>(n));
  const auto nv = static_cast<Vertex>(n);
  for (Vertex x = 0; x < nv; ++x) {
    for (Vertex y = x + 1; y < nv; ++y) {
      if (color(x, y) == wanted) g.add_edge(x, y);
    }
  }
  return g;
}

MonoSearchResult sample_search(std::uint64_t n, const PairColorFn& color, int t,
                               const MonoSearchOptions& options, int first, int last) {
  MonoSearchResult result;
  const StreamKey key = StreamKey(n).with(StreamTag::kSample).with(static_cast<std::uint64_t>(t));
  std::vector<Vertex> set;
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    const StreamKey sample = key.with(s);
    set.clear();
    for (std::uint64_t j = 0; set.size() < static_cast<std::size_t>(t); ++j) {
      const auto v = static_cast<Vertex>(sample.with(j).uniform_below(n));
      if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
    }
    std::sort(set.begin(), set.end());
    const int c0 = color(set[0], set[1]);
    if (c0 < first || c0 > last) continue;
    bool mono = true;
    for (std::size_t i = 0; i < set.size() && mono; ++i) {
      for (std::size_t j = i + 1; j < set.size() && mono; ++j) mono = color(set[i], set[j]) == c0;
    }
    if (mono) {
      result.witness = MonoWitness{c0, set};
      return result;
    }
  }
  return result;
}

}  // namespace

MonoSearchResult find_mono_clique(std::uint64_t n, int ell, const PairColorFn& color, int t,
                                  const MonoSearchOptions& options) {
  if (t < 1) throw InputError("clique target must be at least 1");
  if (n < static_cast<std::uint64_t>(t)) {
    throw InputError("target exceeds vertex count (t=" + std::to_string(t) +
                     ", N=" + std::to_string(n) + ")");
  }
  const int first = std::max(options.first_color, 1);
  const int last = options.last_color == 0 ? ell : std::min(options.last_color, ell);

  if (n > options.exhaustive_limit) {
    if (t < 2) throw InputError("sampling search needs t >= 2");
    return sample_search(n, color, t, options, first, last);
  }

  MonoSearchResult result;
  result.exhaustive = true;
  if (t == 1) {
    // Any single vertex is a (trivially monochromatic) clique.
    result.witness = MonoWitness{first, {0}};
    return result;
  }
  if (first > last) return result;

  const auto classes = static_cast<std::size_t>(last - first + 1);
  std::vector<CliqueQuery> answers(classes);
  auto search_class = [&](std::size_t i) {
    const BitGraph g = materialize(n, color, first + static_cast<int>(i));
    answers[i] = has_clique_of_order(g, t, options.node_budget);
  };

  const auto threads = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(options.threads, 1)), 1, classes);
  if (threads == 1) {
    for (std::size_t i = 0; i < classes; ++i) {
      search_class(i);
      if (answers[i].found) {
        answers.resize(i + 1);
        break;
      }
    }
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < classes; i += threads) search_class(i);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (std::size_t i = 0; i < answers.size(); ++i) {
    result.nodes += answers[i].nodes;
    if (answers[i].found) {
      result.witness = MonoWitness{first + static_cast<int>(i), answers[i].witness};
      break;
    }
  }
  return result;
}

MonoSearchResult find_mono_clique(const EdgeColoring& c, int t, const MonoSearchOptions& options) {
  return find_mono_clique(
      c.vertex_count(), c.colors(), [&c](Vertex x, Vertex y) { return c.color_unchecked(x, y); },
      t, options);
}

bool is_mono_witness(const EdgeColoring& c, const MonoWitness& w, int t) {
  if (static_cast<int>(w.vertices.size()) != t) return false;
  if (w.color < 1 || w.color > c.colors()) return false;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (w.vertices[i] >= c.vertex_count()) return false;
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j) {
      if (w.vertices[i] == w.vertices[j]) return false;
      if (c.color_unchecked(w.vertices[i], w.vertices[j]) != w.color) return false;
    }
  }
  return true;
}

}  // namespace ramsey
