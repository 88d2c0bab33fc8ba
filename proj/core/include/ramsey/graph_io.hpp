#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ramsey/bit_graph.hpp"

namespace ramsey {

/// A G0 graph file: header `g0 t=<t> n=<n> m=<edges>` followed by one
/// `<i> <j>` line per edge with i < j, in ascending order.
struct G0File {
  int t = 0;
  BitGraph graph;
};

void write_graph_file(std::ostream& out, int t, const BitGraph& g);
std::string graph_file_text(int t, const BitGraph& g);

/// Parses and validates a graph file. Throws InputError with a line number
/// on malformed input. Labels are attached when n = 2^(t-1).
G0File read_graph_file(std::istream& in);
G0File read_graph_file(const std::string& path);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace ramsey
