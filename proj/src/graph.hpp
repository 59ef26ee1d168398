#ifndef KCOVER_GRAPH_HPP
#define KCOVER_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kcover {

// Engine-wide cap: one 32-bit word per adjacency row.
constexpr int kMaxOrder = 32;

using VertexSet = uint32_t;

/// Simple undirected labeled graph on at most 32 vertices.
/// Adjacency is stored as one bitset row per vertex; rows are kept
/// symmetric and loop-free by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    int order() const { return order_; }
    int edge_count() const;

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1u;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const { return std::popcount(neighbors(v)); }
    int min_degree() const;
    int max_degree() const;

    /// Edges as (u,v) pairs with u < v, ascending lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Labeled equality (names ignored).
    bool operator==(const Graph& o) const {
        if (order_ != o.order_) return false;
        for (int v = 0; v < order_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

private:
    void check_vertex(int v) const;

    int order_ = 0;
    std::array<VertexSet, kMaxOrder> adj_{};
    std::string name_;
};

inline int popcount(VertexSet s) { return std::popcount(s); }

/// Members of a vertex set in ascending order.
std::vector<int> set_members(VertexSet s);

/// Neighbors of v in ascending order.
std::vector<int> neighbor_list(const Graph& g, int v);

Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_cycle(int n);
Graph make_path(int n);

/// Identify vertex v1 of g1 with vertex v2 of g2. The merged vertex keeps
/// v1's index; g2's remaining vertices are appended after g1's.
Graph one_vertex_join(const Graph& g1, const Graph& g2, int v1, int v2);

Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Remove edge uv. Throws if absent. Isolated vertices are retained.
Graph delete_edge(const Graph& g, int u, int v);

/// Remove vertex v and its incident edges; higher vertices shift down.
Graph delete_vertex(const Graph& g, int v);

/// Drop all isolated vertices, compacting labels.
Graph remove_isolated(const Graph& g);

/// Repeatedly replace a degree-2 vertex with non-adjacent neighbors u,w by
/// the edge uw, then drop isolated vertices. The result is homeomorphic to
/// the input and has no suppressible vertex.
Graph suppress_degree2(const Graph& g);

/// Subgraph induced on the vertices in `keep`, labels compacted in
/// ascending vertex order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Graph on `order` vertices whose edge set is the given list.
Graph graph_from_edges(int order, const std::vector<std::pair<int, int>>& edges);

/// Apply a relabeling: vertex v of g becomes perm[v] of the result.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Connected components as vertex sets (isolated vertices are their own
/// components), ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace kcover

#endif
