#include "scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcover {

EmbeddingScheme default_scheme(const Graph& g) {
    int n = g.order();
    EmbeddingScheme s;
    s.rotation.resize(n);
    s.signature.assign(n, std::vector<int>(n, 1));
    for (int v = 0; v < n; ++v)
        for (int u : neighbor_list(g, v)) s.rotation[v].push_back(u);
    return s;
}

void validate_scheme(const Graph& g, const EmbeddingScheme& s) {
    int n = g.order();
    if (s.order() != n) throw std::invalid_argument("scheme order mismatch");
    if (static_cast<int>(s.signature.size()) != n)
        throw std::invalid_argument("scheme signature size mismatch");
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(s.signature[v].size()) != n)
            throw std::invalid_argument("scheme signature row size mismatch");
        std::vector<int> sorted = s.rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != neighbor_list(g, v))
            throw std::invalid_argument(
                "rotation at vertex " + std::to_string(v) +
                " is not a permutation of its neighborhood");
    }
    for (auto [u, v] : g.edges()) {
        int a = s.signature[u][v], b = s.signature[v][u];
        if ((a != 1 && a != -1) || a != b)
            throw std::invalid_argument("bad signature on edge " +
                                        std::to_string(u) + "-" +
                                        std::to_string(v));
    }
}

namespace {

// Face tracing works on flags: a directed edge together with a side. The
// side flips whenever the flag crosses an edge with signature -1, and the
// side decides whether the walk turns to the rotation successor or
// predecessor. Each face is traversed by exactly two flag orbits (one per
// side); tracing an orbit and its mirror accounts for one face.
struct Tracer {
    const Graph& g;
    const EmbeddingScheme& s;
    int n;
    std::vector<std::vector<int>> pos;  // pos[v][u] = index of u in rotation[v]
    std::vector<char> visited;          // flag id -> seen

    Tracer(const Graph& graph, const EmbeddingScheme& scheme)
        : g(graph), s(scheme), n(graph.order()) {
        pos.assign(n, std::vector<int>(n, -1));
        for (int v = 0; v < n; ++v)
            for (size_t i = 0; i < s.rotation[v].size(); ++i)
                pos[v][s.rotation[v][i]] = static_cast<int>(i);
        visited.assign(static_cast<size_t>(n) * n * 2, 0);
    }

    int flag_id(int u, int v, int side) const {
        return (u * n + v) * 2 + (side < 0 ? 1 : 0);
    }

    // One step: the flag (u -> v, side) continues out of v.
    void step(int& u, int& v, int& side) const {
        side *= s.signature[u][v];
        const auto& rot = s.rotation[v];
        int d = static_cast<int>(rot.size());
        int i = pos[v][u];
        int j = side > 0 ? (i + 1) % d : (i + d - 1) % d;
        u = v;
        v = rot[j];
    }

    std::vector<int> trace_orbit(int u0, int v0, int side0, bool record) {
        std::vector<int> walk;
        int u = u0, v = v0, side = side0;
        do {
            visited[flag_id(u, v, side)] = 1;
            if (record) walk.push_back(u);
            step(u, v, side);
        } while (u != u0 || v != v0 || side != side0);
        return walk;
    }
};

}  // namespace

std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const EmbeddingScheme& s) {
    validate_scheme(g, s);
    Tracer t(g, s);
    std::vector<std::vector<int>> faces;
    for (auto [u, v] : g.edges()) {
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            for (int side : {1, -1}) {
                if (t.visited[t.flag_id(a, b, side)]) continue;
                faces.push_back(t.trace_orbit(a, b, side, true));
                // Mirror orbit: same face, opposite traversal.
                t.trace_orbit(b, a, -side * s.signature[a][b], false);
            }
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) faces.push_back({v});
    return faces;
}

int face_count(const Graph& g, const EmbeddingScheme& s) {
    return static_cast<int>(trace_faces(g, s).size());
}

int scheme_euler_genus(const Graph& g, const EmbeddingScheme& s) {
    auto faces = trace_faces(g, s);
    auto comps = components(g);
    int total = 0;
    for (VertexSet comp : comps) {
        int vc = popcount(comp);
        int ec = 0;
        for (auto [u, v] : g.edges())
            if (comp & (VertexSet{1} << u)) ++ec;
        int fc = 0;
        for (const auto& face : faces)
            if (comp & (VertexSet{1} << face[0])) ++fc;
        total += 2 - vc + ec - fc;
    }
    return total;
}

bool scheme_orientable(const Graph& g, const EmbeddingScheme& s) {
    validate_scheme(g, s);
    // Switch vertex signs along a spanning forest; the scheme is orientable
    // iff that makes every remaining edge positive, i.e. every cycle has
    // signature product +1.
    int n = g.order();
    std::vector<int> sign(n, 0);
    for (int root = 0; root < n; ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : neighbor_list(g, v)) {
                if (sign[u] == 0) {
                    sign[u] = sign[v] * s.signature[v][u];
                    stack.push_back(u);
                } else if (sign[u] != sign[v] * s.signature[v][u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool scheme_fits(const Graph& g, const EmbeddingScheme& s,
                 const Surface& surf) {
    int eg = scheme_euler_genus(g, s);
    bool orient = scheme_orientable(g, s);
    if (surf.orientable) return orient && eg <= surf.euler_genus();
    return eg <= surf.genus - (orient ? 1 : 0);
}

}  // namespace kcover
