#ifndef KCOVER_KURATOWSKI_HPP
#define KCOVER_KURATOWSKI_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace kcover {

enum class KuratowskiKind { K5, K33 };

std::string kind_name(KuratowskiKind k);
std::optional<KuratowskiKind> kind_from_name(const std::string& name);

/// One subdivision of K5 or K3,3 found inside a host graph, as the host
/// vertices it uses: 5 branch vertices and 10 paths, or 6 branch vertices
/// (one side of the bipartition, then the other) and 9 paths. Paths list
/// their vertices endpoints included, follow the fixed pair order
/// (lexicographic over branch indices), and run from the lower-indexed
/// branch endpoint. `edges` is the union of the path edges, sorted.
struct KuratowskiSubgraph {
    KuratowskiKind kind;
    std::vector<int> branch_vertices;
    std::vector<std::vector<int>> paths;
    std::vector<std::pair<int, int>> edges;
};

/// The branch pairs joined by paths, as indices into branch_vertices.
std::vector<std::pair<int, int>> kuratowski_pairs(KuratowskiKind kind);

/// Decide whether g, ignoring isolated vertices, is exactly a subdivision
/// of K5 or of K3,3 (nothing more: every vertex on it, every edge of it).
std::optional<KuratowskiKind> classify_subdivision(const Graph& g);

struct KuratowskiPool {
    std::vector<KuratowskiSubgraph> items;  // sorted by edge list
    bool truncated = false;                 // hit the enumeration limit
};

/// Every subdivision of K5 or K3,3 that is a subgraph of g, each edge set
/// exactly once, sorted by their edge lists. Stops recording past `limit`
/// items and sets `truncated`.
KuratowskiPool enumerate_kuratowski(const Graph& g, size_t limit = 2'000'000);

/// Stream the same subdivisions without materializing them, in a fixed
/// deterministic order (all K5 kinds first, then K3,3, generation order).
/// The sink returns false to stop early; returns true when the sweep ran
/// to completion.
bool for_each_kuratowski(
    const Graph& g, const std::function<bool(const KuratowskiSubgraph&)>& sink);

/// True when g has any K5 or K3,3 subdivision as a subgraph; by Kuratowski's
/// theorem this is exactly nonplanarity.
bool contains_kuratowski(const Graph& g);

}  // namespace kcover

#endif
