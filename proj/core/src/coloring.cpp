#include "ramsey/coloring.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "ramsey/errors.hpp"
#include "ramsey/gf2.hpp"
#include "ramsey/stream.hpp"

namespace ramsey {

std::string to_string(ColoringKind kind) {
  switch (kind) {
    case ColoringKind::kBlowup:
      return "blowup";
    case ColoringKind::kErdos:
      return "erdos";
    case ColoringKind::kProduct:
      return "product";
  }
  return "unknown";
}

ColoringKind parse_coloring_kind(const std::string& text) {
  if (text == "blowup") return ColoringKind::kBlowup;
  if (text == "erdos") return ColoringKind::kErdos;
  if (text == "product") return ColoringKind::kProduct;
  throw InputError("unknown colouring kind '" + text + "'");
}

void ColoringSpec::validate() const {
  if (n < 1) throw InputError("N must be at least 1");
  if (n > kVertexCapacity) throw InputError("N exceeds the vertex-index capacity 2^32");
  switch (kind) {
    case ColoringKind::kBlowup:
      if (t % 2 != 0) {
        throw InputError("construction requires even t (got t=" + std::to_string(t) + ")");
      }
      if (t < 2 || t > kMaxEnumerationDimension) {
        throw InputError("blowup colouring needs 2 <= t <= " +
                         std::to_string(kMaxEnumerationDimension));
      }
      if (m < 0) throw InputError("m must be non-negative");
      if (ell != m + 2) throw InputError("blowup colouring needs ell = m + 2");
      if (!factors.empty()) throw InputError("only product colourings have factors");
      break;
    case ColoringKind::kErdos:
      if (ell < 2) throw InputError("erdos colouring needs ell >= 2");
      if (t < 0) throw InputError("t must be non-negative");
      if (!factors.empty()) throw InputError("only product colourings have factors");
      break;
    case ColoringKind::kProduct: {
      if (factors.size() != 2) throw InputError("product colouring needs exactly two factors");
      for (const auto& f : factors) f.validate();
      if (ell != factors[0].ell + factors[1].ell) {
        throw InputError("product colouring needs ell = ell1 + ell2");
      }
      if (n != factors[0].n * factors[1].n) {
        throw InputError("product colouring needs N = N1 * N2");
      }
      break;
    }
  }
}

ColoringSpec ColoringSpec::with_seed(std::uint64_t new_seed) const {
  ColoringSpec copy = *this;
  copy.seed = new_seed;
  return copy;
}

namespace {

ColoringSpec make_spec(ColoringKind kind, int t, int m, int ell, std::uint64_t n,
                       std::uint64_t seed) {
  ColoringSpec s;
  s.kind = kind;
  s.t = t;
  s.m = m;
  s.ell = ell;
  s.n = n;
  s.seed = seed;
  return s;
}

}  // namespace

int EdgeColoring::pair_color(Vertex lo, Vertex hi) const {
  switch (spec_.kind) {
    case ColoringKind::kBlowup: {
      const auto n = static_cast<std::size_t>(spec_.n);
      for (int i = 0; i < spec_.m; ++i) {
        const std::uint64_t a = even_weight_encoding(tables_[static_cast<std::size_t>(i) * n + lo]);
        const std::uint64_t b = even_weight_encoding(tables_[static_cast<std::size_t>(i) * n + hi]);
        if (std::popcount(a & b) & 1) return i + 1;
      }
      const StreamKey key = StreamKey(spec_.seed).with(StreamTag::kPair).with({lo, hi});
      return spec_.m + 1 + static_cast<int>(key.uniform_below(2));
    }
    case ColoringKind::kErdos: {
      const StreamKey key = StreamKey(spec_.seed).with(StreamTag::kPair).with({lo, hi});
      return 1 + static_cast<int>(key.uniform_below(static_cast<std::uint64_t>(spec_.ell)));
    }
    case ColoringKind::kProduct: {
      const auto n2 = right_->vertex_count();
      const auto a1 = static_cast<Vertex>(lo / n2), a2 = static_cast<Vertex>(hi / n2);
      if (a1 != a2) return left_->color_unchecked(a1, a2);
      const auto b1 = static_cast<Vertex>(lo % n2), b2 = static_cast<Vertex>(hi % n2);
      return left_->colors() + right_->color_unchecked(b1, b2);
    }
  }
  return 0;
}

int EdgeColoring::color_unchecked(Vertex x, Vertex y) const {
  return x < y ? pair_color(x, y) : pair_color(y, x);
}

int EdgeColoring::color_of(Vertex x, Vertex y) const {
  if (x == y) throw InputError("colour_of needs two distinct vertices");
  if (x >= spec_.n || y >= spec_.n) {
    throw InputError("vertex out of range for N=" + std::to_string(spec_.n));
  }
  return color_unchecked(x, y);
}

std::span<const std::uint32_t> EdgeColoring::blowup_table(int i) const {
  if (spec_.kind != ColoringKind::kBlowup || i < 1 || i > spec_.m) {
    throw InputError("blowup table index out of range");
  }
  const auto n = static_cast<std::size_t>(spec_.n);
  return {tables_.data() + static_cast<std::size_t>(i - 1) * n, n};
}

EdgeColoring generate_blowup_coloring(int t, int m, std::uint64_t n, std::uint64_t seed) {
  EdgeColoring c;
  c.spec_ = make_spec(ColoringKind::kBlowup, t, m, m + 2, n, seed);
  c.spec_.validate();
  const std::uint64_t v_size = std::uint64_t{1} << (t - 1);
  c.tables_.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  const StreamKey base = StreamKey(seed).with(StreamTag::kBlowup);
  for (int i = 1; i <= m; ++i) {
    const StreamKey per_map = base.with(static_cast<std::uint64_t>(i));
    auto* row = c.tables_.data() + static_cast<std::size_t>(i - 1) * n;
    for (std::uint64_t x = 0; x < n; ++x) {
      row[x] = static_cast<std::uint32_t>(per_map.with(x).uniform_below(v_size));
    }
  }
  return c;
}

EdgeColoring generate_erdos_coloring(std::uint64_t n, int ell, std::uint64_t seed, int t) {
  EdgeColoring c;
  c.spec_ = make_spec(ColoringKind::kErdos, t, 0, ell, n, seed);
  c.spec_.validate();
  return c;
}

EdgeColoring product_coloring(const EdgeColoring& c1, const EdgeColoring& c2) {
  const std::uint64_t n1 = c1.vertex_count(), n2 = c2.vertex_count();
  if (n1 != 0 && n2 > kVertexCapacity / n1) {
    throw InputError("product colouring exceeds the vertex-index capacity 2^32");
  }
  EdgeColoring c;
  c.spec_ = make_spec(ColoringKind::kProduct, std::max(c1.spec().t, c2.spec().t), 0,
                      c1.colors() + c2.colors(), n1 * n2, 0);
  c.spec_.factors = {c1.spec(), c2.spec()};
  c.spec_.validate();
  c.left_ = std::make_shared<const EdgeColoring>(c1);
  c.right_ = std::make_shared<const EdgeColoring>(c2);
  return c;
}

EdgeColoring build_coloring(const ColoringSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ColoringKind::kBlowup:
      return generate_blowup_coloring(spec.t, spec.m, spec.n, spec.seed);
    case ColoringKind::kErdos:
      return generate_erdos_coloring(spec.n, spec.ell, spec.seed, spec.t);
    case ColoringKind::kProduct: {
      EdgeColoring left = build_coloring(
          spec.factors[0].with_seed(spec.factors[0].seed + spec.seed));
      EdgeColoring right = build_coloring(
          spec.factors[1].with_seed(spec.factors[1].seed + spec.seed));
      EdgeColoring c = product_coloring(left, right);
      c.spec_ = spec;
      return c;
    }
  }
  throw InputError("unknown colouring kind");
}

BitGraph color_class(const EdgeColoring& c, int color) {
  const auto n = static_cast<std::size_t>(c.vertex_count());
  BitGraph g(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (c.color_unchecked(x, y) == color) g.add_edge(x, y);
    }
  }
  return g;
}

void write_edge_csv(std::ostream& out, const EdgeColoring& c) {
  if (c.vertex_count() > kMaxEdgeDumpVertices) {
    throw InputError("edge dump is limited to N <= " + std::to_string(kMaxEdgeDumpVertices));
  }
  out << "x,y,color\n";
  const auto n = static_cast<Vertex>(c.vertex_count());
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) out << x << ',' << y << ',' << c.color_unchecked(x, y) << '\n';
  }
}

}  // namespace ramsey
