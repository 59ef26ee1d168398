#ifndef KCOVER_OBSTRUCTION_HPP
#define KCOVER_OBSTRUCTION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "embed.hpp"
#include "graph.hpp"
#include "surface.hpp"

namespace kcover {

/// One single-edge-deletion probe: does g minus uv (isolated vertices
/// dropped) embed in the surface?
struct DeletionResult {
    int u = 0;
    int v = 0;
    bool embeds = false;
};

/// Minimality report for one graph against one surface. `minimal` holds
/// exactly when the graph fails the surface and every single-edge
/// deletion embeds.
struct ObstructionRecord {
    Graph graph;
    Surface surface;
    bool fails_surface = false;
    bool minimal = false;
    std::vector<DeletionResult> deletions;  // one per edge, edge order
    std::string catalog_id;
};

/// Probe g for edge-deletion minimality on s. Requires at least one
/// vertex and no isolated vertices; throws std::invalid_argument
/// otherwise. When g embeds, the deletions are filled as embeddable
/// without further search (subgraphs of an embeddable graph embed).
ObstructionRecord is_obstruction(const Graph& g, const Surface& s, Engine& engine);

struct GenerationProgress {
    int edges = 0;             // level just finished
    uint64_t classes = 0;      // isomorphism classes at that level
    uint64_t candidates = 0;   // connected min-degree-3 probes so far
    uint64_t found = 0;        // obstructions so far
};

struct GenerateOptions {
    /// Called once per completed edge level.
    std::function<void(const GenerationProgress&)> progress;
    /// When set, per-level class files and a found-so-far file are
    /// written under this directory and an interrupted run resumes from
    /// the last completed level.
    std::string checkpoint_dir;
    /// Worker threads probing the candidates of a level. Each worker
    /// runs its own engine (memo not shared); results are merged in
    /// candidate order, so the output is identical for any value.
    int jobs = 1;
};

/// Every obstruction for s among connected min-degree-3 graphs of the
/// given order, one canonical representative per isomorphism class,
/// sorted by edge count then graph6 string, with catalog ids assigned
/// as "<surface>-o<order>-<index>". Levelwise sweep over all
/// isomorphism classes by edge count; an extension is dropped once its
/// min-degree-3 connected completions all exceed the edge cap
/// 3*(order-2+eg)+1, past which some deletion still violates the Euler
/// bound.
std::vector<ObstructionRecord> generate_obstructions(int order, const Surface& s,
                                                     Engine& engine,
                                                     const GenerateOptions& opts = {});

/// All isomorphism classes on `order` vertices, grouped by edge count
/// (index = number of edges, up to max_edges). Diagnostic for the
/// generator: level sizes must match the unlabeled-graph census.
std::vector<std::vector<Graph>> all_graph_classes(int order, int max_edges);

/// Write records as graph6 lines plus a JSON sidecar (catalog ids,
/// surface, edge counts, generation timestamp).
void write_catalog(const std::vector<ObstructionRecord>& records, int order,
                   const Surface& s, const std::string& graph6_path,
                   const std::string& meta_path);

}  // namespace kcover

#endif
