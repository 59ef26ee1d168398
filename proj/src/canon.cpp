#include "canon.hpp"

#include <algorithm>

namespace kcover {

uint64_t CanonicalForm::hash_key() const {
    // FNV-1a over the order byte and the encoding words.
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    h ^= static_cast<uint64_t>(order);
    h *= 1099511628211ULL;
    for (uint64_t w : words) mix(w);
    return h;
}

namespace {

// Branch-and-bound search for the maximal adjacency encoding.
//
// Vertices are assigned to positions 0..n-1 one at a time. Placing a vertex
// at position j contributes "column j": its adjacency bits to positions
// 0..j-1, with position 0 most significant. Columns are compared in order,
// so at every node only candidates whose column ties the maximum can still
// lead to the maximal string, and the running prefix is compared against the
// best complete labeling found so far.
struct Search {
    const Graph& g;
    int n;
    uint32_t adj[kMaxOrder];

    // col[v] = v's would-be column at the current depth.
    uint32_t col[kMaxOrder];
    uint32_t placed_mask = 0;
    int place[kMaxOrder];  // place[pos] = vertex

    uint32_t best_cols[kMaxOrder];
    int best_place[kMaxOrder];
    bool have_best = false;
    uint64_t generation = 0;

    // Union-find over vertices, merged along discovered automorphisms.
    // Only consulted at the root, where no vertex is placed yet.
    int orbit[kMaxOrder];

    explicit Search(const Graph& graph) : g(graph), n(graph.order()) {
        for (int v = 0; v < n; ++v) {
            adj[v] = g.neighbors(v);
            col[v] = 0;
            orbit[v] = v;
        }
    }

    int find(int v) {
        while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
        return v;
    }

    void record_automorphism() {
        // Current labeling and best labeling produce the same string, so
        // v -> best_place[position of v] is an automorphism.
        int cur_pos[kMaxOrder];
        for (int p = 0; p < n; ++p) cur_pos[place[p]] = p;
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(best_place[cur_pos[v]]);
            if (a != b) orbit[a] = b;
        }
    }

    // twins(u, w): the transposition (u w) is an automorphism, so their
    // subtrees are interchangeable and only one needs to be explored.
    bool twins(int u, int w) const {
        uint32_t rest = ~((1u << u) | (1u << w));
        return (adj[u] & rest) == (adj[w] & rest);
    }

    // cmp: 0 while the path's columns equal the best's prefix, 1 once
    // strictly greater (or while no best exists yet).
    void descend(int depth, int cmp) {
        if (depth == n) {
            // best_cols was already filled in on the way down (every node on
            // a cmp==1 path writes its column), so only the placement and the
            // bookkeeping remain.
            if (cmp == 0) {
                record_automorphism();
            } else {
                for (int p = 0; p < n; ++p) best_place[p] = place[p];
                have_best = true;
                ++generation;
            }
            return;
        }

        uint32_t maxcol = 0;
        for (int v = 0; v < n; ++v) {
            if (placed_mask & (1u << v)) continue;
            if (col[v] > maxcol) maxcol = col[v];
        }

        if (have_best && cmp == 0) {
            if (maxcol < best_cols[depth]) return;
            if (maxcol > best_cols[depth]) cmp = 1;
        }
        if (cmp == 1) best_cols[depth] = maxcol;  // path is the new best's prefix
        // NOTE: writing best_cols before the leaf is safe only because every
        // node on a cmp==1 path ends up as a prefix of the replacement best;
        // siblings re-read best_cols after the generation check below.

        int tried[kMaxOrder];
        int ntried = 0;
        for (int v = 0; v < n; ++v) {
            if (placed_mask & (1u << v)) continue;
            if (col[v] != maxcol) continue;
            if (depth == 0 && ntried > 0) {
                bool dup = false;
                for (int i = 0; i < ntried && !dup; ++i)
                    dup = find(v) == find(tried[i]);
                if (dup) continue;
            }
            bool dup = false;
            for (int i = 0; i < ntried && !dup; ++i) dup = twins(tried[i], v);
            if (dup) continue;
            tried[ntried++] = v;

            uint64_t gen_before = generation;
            place[depth] = v;
            placed_mask |= 1u << v;
            for (int w = 0; w < n; ++w)
                col[w] = (col[w] << 1) | ((adj[w] >> v) & 1u);

            descend(depth + 1, cmp);

            for (int w = 0; w < n; ++w) col[w] >>= 1;
            placed_mask &= ~(1u << v);

            if (generation != gen_before) cmp = 0;  // best now runs through here
        }
    }
};

}  // namespace

CanonicalResult canonicalize(const Graph& g) {
    int n = g.order();
    CanonicalResult res;
    res.form.order = n;
    res.labeling.assign(n, 0);
    if (n <= 1) return res;

    Search s(g);
    s.descend(0, 1);

    // best_cols[j] holds column j (j bits, position 0 most significant).
    // Flatten into the packed bit string.
    int nbits = n * (n - 1) / 2;
    res.form.words.assign((nbits + 63) / 64, 0);
    int t = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
            if ((s.best_cols[j] >> (j - 1 - i)) & 1u)
                res.form.words[t / 64] |= 1ULL << (63 - t % 64);
        }
    }
    for (int p = 0; p < n; ++p) res.labeling[s.best_place[p]] = p;
    return res;
}

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

Graph canonical_graph(const Graph& g) {
    Graph h = relabel(g, canonicalize(g).labeling);
    h.set_name("");
    return h;
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count())
        return false;
    return canonical_form(g1) == canonical_form(g2);
}

}  // namespace kcover
