#include "doctest.h"
#include "canon.hpp"
#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace kcover;

namespace {

Graph random_relabel(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

}  // namespace

TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937 rng(7);
    for (const Graph& g :
         {make_complete(6), make_cycle(9), make_path(8),
          make_complete_bipartite(3, 4), disjoint_union(make_cycle(3), make_cycle(4))}) {
        CanonicalForm base = canonical_form(g);
        for (int trial = 0; trial < 20; ++trial)
            CHECK(canonical_form(random_relabel(g, rng)) == base);
    }
}

TEST_CASE("canonical labeling actually produces the form") {
    std::mt19937 rng(11);
    Graph g = random_relabel(make_complete_bipartite(2, 5), rng);
    CanonicalResult r = canonicalize(g);
    Graph c = relabel(g, r.labeling);
    CHECK(canonical_form(c) == r.form);
    CHECK(canonical_graph(c) == canonical_graph(g));
    // Idempotent on representatives.
    CHECK(canonical_graph(canonical_graph(g)) == canonical_graph(g));
}

TEST_CASE("isomorphism decisions") {
    CHECK(is_isomorphic(make_cycle(5), relabel(make_cycle(5), {3, 1, 4, 0, 2})));

    // K3,3 and the triangular prism: both cubic on 6 vertices, 9 edges.
    Graph prism(6);
    for (int v = 0; v < 3; ++v) {
        prism.add_edge(v, (v + 1) % 3);
        prism.add_edge(3 + v, 3 + (v + 1) % 3);
        prism.add_edge(v, 3 + v);
    }
    CHECK_FALSE(is_isomorphic(prism, make_complete_bipartite(3, 3)));

    CHECK_FALSE(is_isomorphic(make_path(4), make_cycle(4)));
    CHECK(is_isomorphic(Graph(0), Graph(0)));
    CHECK(is_isomorphic(Graph(3), Graph(3)));
    CHECK_FALSE(is_isomorphic(Graph(3), Graph(4)));
}

TEST_CASE("edge count survives in the encoding") {
    Graph g = make_complete_bipartite(4, 4);
    CanonicalForm f = canonical_form(g);
    int bits = 0;
    for (uint64_t w : f.words) bits += std::popcount(w);
    CHECK(bits == g.edge_count());
}

TEST_CASE("distinct small graphs get distinct forms") {
    // All 11 graphs on 4 vertices, built explicitly.
    std::vector<Graph> reps;
    for (int mask = 0; mask < 64; ++mask) {
        Graph g(4);
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        bool fresh = true;
        for (const Graph& r : reps)
            if (is_isomorphic(r, g)) fresh = false;
        if (fresh) reps.push_back(g);
    }
    CHECK(reps.size() == 11);
}

TEST_CASE("hash keys rarely collide on small classes") {
    std::vector<uint64_t> keys;
    for (int n = 1; n <= 5; ++n) {
        Graph g = make_path(n);
        keys.push_back(canonical_form(g).hash_key());
    }
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}
