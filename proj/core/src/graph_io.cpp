#include "ramsey/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

void write_graph_file(std::ostream& out, int t, const BitGraph& g) {
  out << "g0 t=" << t << " n=" << g.size() << " m=" << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string graph_file_text(int t, const BitGraph& g) {
  std::ostringstream out;
  write_graph_file(out, t, g);
  return out.str();
}

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw InputError("graph file line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_field(const std::string& token, const std::string& key, std::size_t line) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) malformed(line, "expected " + prefix + "<value>");
  const std::string value = token.substr(prefix.size());
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
    malformed(line, "bad value for " + key);
  }
  return std::stoull(value);
}

}  // namespace

G0File read_graph_file(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("graph file is empty");
  std::istringstream header(line);
  std::string tag, t_tok, n_tok, m_tok, extra;
  if (!(header >> tag >> t_tok >> n_tok >> m_tok) || (header >> extra) || tag != "g0") {
    malformed(1, "expected header 'g0 t=<t> n=<n> m=<edges>'");
  }
  const auto t = parse_field(t_tok, "t", 1);
  const auto n = parse_field(n_tok, "n", 1);
  const auto m = parse_field(m_tok, "m", 1);
  if (n > (std::uint64_t{1} << 32)) malformed(1, "n exceeds vertex capacity");

  G0File file;
  file.t = static_cast<int>(t);
  file.graph = BitGraph(static_cast<std::size_t>(n));
  std::size_t lineno = 1;
  std::uint64_t seen = 0;
  std::int64_t prev_u = -1, prev_v = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::int64_t u = -1, v = -1;
    if (!(row >> u >> v) || (row >> extra)) malformed(lineno, "expected '<i> <j>'");
    if (u < 0 || v < 0 || static_cast<std::uint64_t>(v) >= n) {
      malformed(lineno, "vertex out of range");
    }
    if (u >= v) malformed(lineno, "edges must satisfy i < j");
    if (u < prev_u || (u == prev_u && v <= prev_v)) {
      malformed(lineno, "edges must be sorted and distinct");
    }
    prev_u = u;
    prev_v = v;
    file.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++seen;
  }
  if (seen != m) {
    throw InputError("graph file declares m=" + std::to_string(m) + " but lists " +
                     std::to_string(seen) + " edges");
  }
  if (t >= 2 && t <= static_cast<std::uint64_t>(kMaxEnumerationDimension) && t % 2 == 0 &&
      n == (std::uint64_t{1} << (t - 1))) {
    VectorSet v = enumerate_even_weight(static_cast<int>(t));
    file.graph.set_labels({v.begin(), v.end()});
  }
  return file;
}

G0File read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return read_graph_file(in);
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

}  // namespace ramsey
