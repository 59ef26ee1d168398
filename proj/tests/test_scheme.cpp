#include "doctest.h"
#include "graph.hpp"
#include "scheme.hpp"
#include "surface.hpp"

#include <random>
#include <stdexcept>

using namespace kcover;

namespace {

EmbeddingScheme random_scheme(const Graph& g, std::mt19937& rng) {
    EmbeddingScheme s = default_scheme(g);
    for (auto& rot : s.rotation) std::shuffle(rot.begin(), rot.end(), rng);
    for (auto [u, v] : g.edges()) {
        int sign = (rng() & 1) ? 1 : -1;
        s.signature[u][v] = s.signature[v][u] = sign;
    }
    return s;
}

}  // namespace

TEST_CASE("surface parsing") {
    CHECK(parse_surface("sphere") == Surface{true, 0});
    CHECK(parse_surface("s0") == Surface{true, 0});
    CHECK(parse_surface("torus") == Surface{true, 1});
    CHECK(parse_surface("S2") == Surface{true, 2});
    CHECK(parse_surface("n1") == Surface{false, 1});
    CHECK(parse_surface("N4") == Surface{false, 4});
    CHECK(parse_surface("n3").euler_genus() == 3);
    CHECK(parse_surface("s2").euler_genus() == 4);
    CHECK(format_surface({false, 2}) == "n2");
    CHECK(format_surface({true, 0}) == "s0");
    CHECK_THROWS_AS(parse_surface("n0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_surface("plane"), std::invalid_argument);
    CHECK_THROWS_AS(parse_surface("s"), std::invalid_argument);
    CHECK_THROWS_AS(parse_surface("s1x"), std::invalid_argument);
}

TEST_CASE("planar K4: four triangular faces") {
    Graph g = make_complete(4);
    EmbeddingScheme s = default_scheme(g);
    s.rotation[0] = {1, 2, 3};
    s.rotation[1] = {2, 0, 3};
    s.rotation[2] = {3, 0, 1};
    s.rotation[3] = {1, 0, 2};
    CHECK(face_count(g, s) == 4);
    CHECK(scheme_euler_genus(g, s) == 0);
    CHECK(scheme_orientable(g, s));
    CHECK(scheme_fits(g, s, parse_surface("sphere")));
    for (const auto& f : trace_faces(g, s)) CHECK(f.size() == 3);
}

TEST_CASE("single edge has one face") {
    Graph g = make_complete(2);
    EmbeddingScheme s = default_scheme(g);
    CHECK(face_count(g, s) == 1);
    CHECK(scheme_euler_genus(g, s) == 0);

    // A negative signature on a bridge is switching-trivial.
    s.signature[0][1] = s.signature[1][0] = -1;
    CHECK(face_count(g, s) == 1);
    CHECK(scheme_euler_genus(g, s) == 0);
    CHECK(scheme_orientable(g, s));
}

TEST_CASE("triangle, plain and twisted") {
    Graph g = make_cycle(3);
    EmbeddingScheme s = default_scheme(g);
    CHECK(face_count(g, s) == 2);
    CHECK(scheme_euler_genus(g, s) == 0);

    s.signature[0][1] = s.signature[1][0] = -1;
    CHECK_FALSE(scheme_orientable(g, s));
    CHECK(scheme_euler_genus(g, s) == 1);  // projective-plane triangle
    CHECK(scheme_fits(g, s, parse_surface("n1")));
    CHECK_FALSE(scheme_fits(g, s, parse_surface("sphere")));
}

TEST_CASE("K3,3 hexagonal torus embedding") {
    Graph g = make_complete_bipartite(3, 3);
    EmbeddingScheme s = default_scheme(g);
    for (int a = 0; a < 3; ++a) s.rotation[a] = {3, 4, 5};
    for (int b = 3; b < 6; ++b) s.rotation[b] = {0, 1, 2};
    CHECK(face_count(g, s) == 3);
    for (const auto& f : trace_faces(g, s)) CHECK(f.size() == 6);
    CHECK(scheme_euler_genus(g, s) == 2);
    CHECK(scheme_orientable(g, s));
    CHECK(scheme_fits(g, s, parse_surface("torus")));
    CHECK(scheme_fits(g, s, parse_surface("n3")));
    // An orientable Euler-genus-2 scheme does not witness the Klein bottle.
    CHECK_FALSE(scheme_fits(g, s, parse_surface("n2")));
}

TEST_CASE("disconnected schemes sum component genera") {
    Graph g = disjoint_union(make_cycle(3), make_cycle(3));
    EmbeddingScheme s = default_scheme(g);
    CHECK(face_count(g, s) == 4);
    CHECK(scheme_euler_genus(g, s) == 0);
    s.signature[0][1] = s.signature[1][0] = -1;
    s.signature[3][4] = s.signature[4][3] = -1;
    CHECK(scheme_euler_genus(g, s) == 2);
    CHECK_FALSE(scheme_orientable(g, s));
    CHECK(scheme_fits(g, s, parse_surface("n2")));
    CHECK_FALSE(scheme_fits(g, s, parse_surface("n1")));
}

TEST_CASE("isolated vertices contribute trivial faces") {
    Graph g(3);
    g.add_edge(0, 1);
    EmbeddingScheme s = default_scheme(g);
    auto faces = trace_faces(g, s);
    CHECK(faces.size() == 2);
    CHECK(scheme_euler_genus(g, s) == 0);
}

TEST_CASE("face walks use every edge side exactly twice") {
    std::mt19937 rng(3);
    for (const Graph& g : {make_complete(5), make_complete_bipartite(3, 3),
                           make_cycle(6), make_complete(7)}) {
        for (int trial = 0; trial < 25; ++trial) {
            EmbeddingScheme s = random_scheme(g, rng);
            size_t total = 0;
            for (const auto& f : trace_faces(g, s)) total += f.size();
            CHECK(total == 2 * g.edge_count());

            // Orientable schemes have even Euler genus.
            int eg = scheme_euler_genus(g, s);
            CHECK(eg >= 0);
            if (scheme_orientable(g, s)) CHECK(eg % 2 == 0);
        }
    }
}

TEST_CASE("scheme validation") {
    Graph g = make_cycle(3);
    EmbeddingScheme s = default_scheme(g);
    s.rotation[0] = {1, 1};
    CHECK_THROWS_AS(validate_scheme(g, s), std::invalid_argument);
    s = default_scheme(g);
    s.signature[0][1] = 0;
    CHECK_THROWS_AS(validate_scheme(g, s), std::invalid_argument);
    s = default_scheme(g);
    s.signature[0][1] = -1;  // asymmetric
    CHECK_THROWS_AS(validate_scheme(g, s), std::invalid_argument);
    CHECK_THROWS_AS(validate_scheme(make_cycle(4), default_scheme(g)),
                    std::invalid_argument);
}
