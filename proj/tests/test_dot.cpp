#include <stdexcept>

#include "doctest.h"

#include "dot.hpp"
#include "graph.hpp"
#include "names.hpp"

using namespace kcover;

TEST_CASE("dot output round-trips through the reader") {
    Graph g = parse_name("K8-K2");
    std::vector<std::pair<int, int>> bold = {{0, 2}, {2, 5}, {5, 7}};
    std::vector<int> doubled = {0, 2, 5};

    std::string text = to_dot(g, "K8-K2", bold, doubled);
    ParsedDot back = parse_dot(text);

    CHECK(back.name == "K8-K2");
    CHECK(back.graph == g);
    CHECK(back.bold_edges == bold);
    CHECK(back.doubled == doubled);
}

TEST_CASE("isolated vertices and quoted names survive the round trip") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 3);
    // vertices 2 and 4 stay isolated
    std::string text = to_dot(g, "pair \"0\" and \\1");
    ParsedDot back = parse_dot(text);
    CHECK(back.graph.order() == 5);
    CHECK(back.graph == g);
    CHECK(back.name == "pair \"0\" and \\1");
    CHECK(back.bold_edges.empty());
    CHECK(back.doubled.empty());
}

TEST_CASE("reader tolerates hand-written layout") {
    const char* text =
        "strict graph {  // no name\n"
        "  node [shape=circle];\n"
        "  edge [color=gray, penwidth=\"1.5\"];\n"
        "  3 [label=\"three\", shape=doublecircle];\n"
        "  0--1 [style =bold ];\n"
        "  1 -- 2;\n"
        "}\n";
    ParsedDot got = parse_dot(text);
    CHECK(got.name == "");
    CHECK(got.graph.order() == 4);
    CHECK(got.graph.edge_count() == 2);
    CHECK(got.bold_edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(got.doubled == std::vector<int>{3});
}

TEST_CASE("reader rejects what the writer never emits") {
    CHECK_THROWS_AS(parse_dot("digraph { 0 -> 1; }"), std::runtime_error);
    CHECK_THROWS_AS(parse_dot("graph { 0 -- 0; }"), std::runtime_error);
    CHECK_THROWS_AS(parse_dot("graph { 0 -- 1; 1 -- 0; }"), std::runtime_error);
    CHECK_THROWS_AS(parse_dot("graph { 0 -- 1;"), std::runtime_error);
    CHECK_THROWS_AS(parse_dot("graph { a -- b; }"), std::runtime_error);
    CHECK_THROWS_AS(parse_dot("graph { 99 -- 1; }"), std::runtime_error);
    CHECK_THROWS_AS(parse_dot("graph \"unterminated { }"), std::runtime_error);
    CHECK_THROWS_AS(parse_dot("graph { 0 -- 1; } graph { }"), std::runtime_error);

    // line numbers point at the offending statement
    try {
        parse_dot("graph {\n  0 -- 1;\n  2 -- 2;\n}\n");
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("writer validates highlights against the graph") {
    Graph g = make_complete(4);
    CHECK_THROWS_AS(to_dot(g, "bad", {{0, 5}}), std::invalid_argument);
    Graph p = make_path(3);
    CHECK_THROWS_AS(to_dot(p, "bad", {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(to_dot(p, "bad", {}, {3}), std::invalid_argument);
}
