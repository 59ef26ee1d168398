#ifndef KCOVER_DOT_HPP
#define KCOVER_DOT_HPP

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace kcover {

/// Render g as an undirected DOT graph. Every vertex gets its own node
/// statement so a reader can recover the exact order, isolated vertices
/// included. Edges listed in `bold` are drawn with style=bold (covering
/// members inside their host); vertices in `doubled` are drawn as
/// doublecircle (branch vertices). Throws std::invalid_argument when a
/// bold edge is absent from g or a doubled vertex is out of range.
std::string to_dot(const Graph& g, const std::string& name,
                   const std::vector<std::pair<int, int>>& bold = {},
                   const std::vector<int>& doubled = {});

struct ParsedDot {
    std::string name;
    Graph graph;
    std::vector<std::pair<int, int>> bold_edges;  // u < v, ascending
    std::vector<int> doubled;                     // ascending
};

/// Parse the dialect to_dot emits: one undirected graph block with an
/// optional quoted or bare name, integer vertex ids, node statements,
/// edge statements, and optional [key=value, ...] attribute lists.
/// Also tolerates //-comments, 'strict', and default-attribute
/// statements (node [...]; edge [...];). shape=doublecircle marks a
/// vertex as doubled and style=bold marks an edge as bold; other
/// attributes are ignored. Throws std::runtime_error with a
/// line-numbered message on malformed input, directed graphs,
/// self-loops, or duplicate edges.
ParsedDot parse_dot(const std::string& text);

}  // namespace kcover

#endif
