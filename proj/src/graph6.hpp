#ifndef KCOVER_GRAPH6_HPP
#define KCOVER_GRAPH6_HPP

#include <string>

#include "graph.hpp"

namespace kcover {

/// Encode in graph6 format (printable, 63-offset, upper triangle
/// column-major, 6 bits per byte).
std::string write_graph6(const Graph& g);

/// Decode a graph6 line. Accepts an optional ">>graph6<<" header and
/// surrounding whitespace. Throws std::invalid_argument on malformed
/// input or order > 32.
Graph parse_graph6(const std::string& text);

}  // namespace kcover

#endif
