#include "graph.hpp"

#include <stdexcept>

namespace kcover {

Graph::Graph(int order) {
    if (order < 0 || order > kMaxOrder)
        throw std::out_of_range("graph order must be in [0, 32]");
    order_ = order;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order_) throw std::out_of_range("vertex out of range");
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < order_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= VertexSet(1) << v;
    adj_[v] |= VertexSet(1) << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(VertexSet(1) << v);
    adj_[v] &= ~(VertexSet(1) << u);
}

int Graph::min_degree() const {
    int d = order_ == 0 ? 0 : kMaxOrder + 1;
    for (int v = 0; v < order_; ++v) d = std::min(d, degree(v));
    return order_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < order_; ++u) {
        VertexSet higher = adj_[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<int> set_members(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

std::vector<int> neighbor_list(const Graph& g, int v) {
    return set_members(g.neighbors(v));
}

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    g.set_name("K" + std::to_string(n));
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 0 || b < 0 || a + b > kMaxOrder)
        throw std::out_of_range("bipartite part sizes out of range");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    g.set_name("K" + std::to_string(a) + "," + std::to_string(b));
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::out_of_range("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph one_vertex_join(const Graph& g1, const Graph& g2, int v1, int v2) {
    if (v1 < 0 || v1 >= g1.order() || v2 < 0 || v2 >= g2.order())
        throw std::out_of_range("join vertex out of range");
    int n = g1.order() + g2.order() - 1;
    Graph g(n);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    // g2's vertex w maps to v1 if w == v2, else to an appended slot.
    std::vector<int> map(g2.order());
    int next = g1.order();
    for (int w = 0; w < g2.order(); ++w) map[w] = (w == v2) ? v1 : next++;
    for (auto [u, v] : g2.edges()) g.add_edge(map[u], map[v]);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n = g1.order() + g2.order();
    Graph g(n);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(g1.order() + u, g1.order() + v);
    return g;
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
    Graph h = g;
    h.remove_edge(u, v);
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
    Graph h(g.order() - 1);
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        h.add_edge(a - (a > v), b - (b > v));
    }
    return h;
}

Graph remove_isolated(const Graph& g) {
    VertexSet keep = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) keep |= VertexSet(1) << v;
    return induced_subgraph(g, keep);
}

Graph suppress_degree2(const Graph& g) {
    Graph h = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < h.order(); ++v) {
            if (h.degree(v) != 2) continue;
            VertexSet nb = h.neighbors(v);
            int u = std::countr_zero(nb);
            int w = std::countr_zero(nb & (nb - 1));
            if (h.has_edge(u, w)) continue;  // uw would duplicate
            h.remove_edge(v, u);
            h.remove_edge(v, w);
            h.add_edge(u, w);
            changed = true;
        }
    }
    return remove_isolated(h);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::vector<int> map(g.order(), -1);
    int n = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1u) map[v] = n++;
    Graph h(n);
    for (auto [u, v] : g.edges())
        if (map[u] >= 0 && map[v] >= 0) h.add_edge(map[u], map[v]);
    return h;
}

Graph graph_from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation size mismatch");
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if ((seen >> v) & 1u) continue;
        VertexSet comp = VertexSet(1) << v;
        VertexSet frontier = comp;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            VertexSet fresh = g.neighbors(u) & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

}  // namespace kcover
