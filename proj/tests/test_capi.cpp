// Exercises the shared-library C API end to end: graph handles, engine
// queries, covering certificates, and the DOT diagram export. The DOT
// files are read back with the internal parser to keep the two formats
// in lockstep.

#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "doctest.h"
#include "dot.hpp"
#include "kcover.h"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    REQUIRE(f.good());
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path fresh_dir(const char* leaf) {
    fs::path d = fs::temp_directory_path() / leaf;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("graph handles parse both grammars and round-trip graph6") {
    kc_graph* k5 = kc_graph_parse("K5");
    REQUIRE(k5 != nullptr);
    CHECK(kc_graph_order(k5) == 5);
    CHECK(kc_graph_edge_count(k5) == 10);

    char* g6 = nullptr;
    REQUIRE(kc_graph_to_graph6(k5, &g6) == KC_OK);
    CHECK(std::string(g6) == "D~{");

    kc_graph* again = kc_graph_parse(g6);
    REQUIRE(again != nullptr);
    CHECK(kc_graph_order(again) == 5);
    CHECK(kc_graph_edge_count(again) == 10);
    kc_string_free(g6);
    kc_graph_free(again);
    kc_graph_free(k5);

    kc_graph* pattern = kc_graph_parse("K8-(K1,2u2K2)");
    REQUIRE(pattern != nullptr);
    CHECK(kc_graph_edge_count(pattern) == 24);
    kc_graph_free(pattern);

    CHECK(kc_graph_parse("totally bogus !!") == nullptr);
    CHECK(std::strlen(kc_last_error()) > 0);

    CHECK(std::strlen(kc_version()) > 0);
}

TEST_CASE("engine answers embeddability and genus through the C API") {
    kc_engine* eng = kc_engine_new(0);
    REQUIRE(eng != nullptr);
    kc_graph* k5 = kc_graph_parse("K5");
    kc_graph* k4 = kc_graph_parse("K4");
    REQUIRE(k5 != nullptr);
    REQUIRE(k4 != nullptr);

    int embeds = -1;
    REQUIRE(kc_embeds(eng, k5, "sphere", &embeds) == KC_OK);
    CHECK(embeds == 0);
    REQUIRE(kc_embeds(eng, k5, "n1", &embeds) == KC_OK);
    CHECK(embeds == 1);
    REQUIRE(kc_embeds(eng, k4, "s0", &embeds) == KC_OK);
    CHECK(embeds == 1);

    int genus = -1, planar = -1;
    REQUIRE(kc_orientable_genus(eng, k5, &genus) == KC_OK);
    CHECK(genus == 1);
    REQUIRE(kc_nonorientable_genus(eng, k5, &genus, &planar) == KC_OK);
    CHECK(genus == 1);
    CHECK(planar == 0);
    REQUIRE(kc_nonorientable_genus(eng, k4, &genus, &planar) == KC_OK);
    CHECK(planar == 1);

    int is_obs = -1;
    REQUIRE(kc_is_obstruction(eng, k5, "sphere", &is_obs) == KC_OK);
    CHECK(is_obs == 1);
    REQUIRE(kc_is_obstruction(eng, k4, "sphere", &is_obs) == KC_OK);
    CHECK(is_obs == 0);

    CHECK(kc_embeds(eng, k5, "mobius", &embeds) == KC_ERROR);
    CHECK(std::string(kc_last_error()).find("mobius") != std::string::npos);
    CHECK(kc_embeds(eng, nullptr, "sphere", &embeds) == KC_ERROR);

    CHECK(kc_engine_nodes(eng) > 0);

    kc_graph_free(k4);
    kc_graph_free(k5);
    kc_engine_free(eng);
}

TEST_CASE("generation writes a catalog and reports the count") {
    fs::path out = fresh_dir("kcover-capi-gen");
    uint64_t count = 0;
    REQUIRE(kc_generate_obstructions(5, "sphere", out.c_str(), nullptr, 1, nullptr, nullptr,
                                     &count) == KC_OK);
    CHECK(count == 1);
    CHECK(slurp(out / "obstructions-s0-o5.g6") == "D~{\n");
    CHECK(slurp(out / "obstructions-s0-o5.json").find("\"s0-o5-1\"") != std::string::npos);

    CHECK(kc_generate_obstructions(3, "sphere", out.c_str(), nullptr, 1, nullptr, nullptr,
                                   &count) == KC_ERROR);
}

TEST_CASE("covering search writes a certificate that verifies and exports DOT") {
    fs::path work = fresh_dir("kcover-capi-cover");
    fs::path cert = work / "covering.json";

    // Two disjoint K5 copies: the only Kuratowski subgraphs are the two
    // copies themselves, and their union is the host, which needs two
    // crosscaps. A projective-plane-failing pair therefore exists.
    kc_graph* host = kc_graph_parse("I~{?GKF@w");
    REQUIRE(host != nullptr);
    CHECK(kc_graph_order(host) == 10);

    int status = -1, members = 0;
    REQUIRE(kc_find_covering(host, "two K5 copies", 1, cert.c_str(), 0, &status, &members) ==
            KC_OK);
    CHECK(status == KC_COVER_FOUND);
    CHECK(members == 2);

    int pass = 0;
    char* detail = nullptr;
    REQUIRE(kc_verify_certificate(cert.c_str(), &pass, &detail) == KC_OK);
    CHECK(pass == 1);
    CHECK(std::string(detail) == "pass");
    kc_string_free(detail);

    fs::path dots = work / "dots";
    int files = 0;
    REQUIRE(kc_certificate_dot(cert.c_str(), dots.c_str(), &files) == KC_OK);
    CHECK(files == 3);

    std::set<std::string> names;
    for (const auto& entry : fs::directory_iterator(dots)) {
        names.insert(entry.path().filename().string());
        kcover::ParsedDot parsed = kcover::parse_dot(slurp(entry.path()));
        CHECK(parsed.graph.order() == 10);
        CHECK(parsed.graph.edge_count() > 0);
    }
    CHECK(names == std::set<std::string>{"member-0.dot", "member-1.dot", "pair-0-1.dot"});

    kcover::ParsedDot member = kcover::parse_dot(slurp(dots / "member-0.dot"));
    CHECK(member.bold_edges.size() == 10);
    CHECK(member.doubled.size() == 5);

    kc_graph_free(host);
}

TEST_CASE("hosts without a covering report the right status") {
    fs::path work = fresh_dir("kcover-capi-nocover");
    fs::path cert = work / "never.json";
    kc_graph* k4 = kc_graph_parse("K4");
    REQUIRE(k4 != nullptr);
    int status = -1, members = -1;
    REQUIRE(kc_find_covering(k4, "K4", 3, cert.c_str(), 0, &status, &members) == KC_OK);
    CHECK(status == KC_COVER_NONE);
    CHECK(members == 0);
    CHECK(!fs::exists(cert));
    kc_graph_free(k4);
}

TEST_CASE("verification distinguishes violated conditions from malformed files") {
    fs::path work = fresh_dir("kcover-capi-verify");
    fs::path good = work / "good.json";

    kc_graph* host = kc_graph_parse("I~{?GKF@w");
    REQUIRE(host != nullptr);
    int status = -1, members = 0;
    REQUIRE(kc_find_covering(host, "two K5 copies", 1, good.c_str(), 0, &status, &members) ==
            KC_OK);
    REQUIRE(status == KC_COVER_FOUND);
    kc_graph_free(host);

    std::string text = slurp(good);
    // Claiming three members breaks the arity condition without
    // touching anything the JSON parser would reject.
    std::string tampered = text;
    size_t at = tampered.find("\"gtilde\": 1");
    REQUIRE(at != std::string::npos);
    tampered.replace(at, 11, "\"gtilde\": 2");
    std::ofstream(work / "tampered.json") << tampered;

    int pass = -1;
    char* detail = nullptr;
    REQUIRE(kc_verify_certificate((work / "tampered.json").c_str(), &pass, &detail) == KC_OK);
    CHECK(pass == 0);
    CHECK(std::string(detail) == "arity");
    kc_string_free(detail);

    std::ofstream(work / "trunc.json") << text.substr(0, text.size() / 2);
    detail = nullptr;
    CHECK(kc_verify_certificate((work / "trunc.json").c_str(), &pass, &detail) ==
          KC_MALFORMED);
    CHECK(std::strlen(kc_last_error()) > 0);

    CHECK(kc_verify_certificate((work / "absent.json").c_str(), &pass, &detail) ==
          KC_MALFORMED);
}

TEST_CASE("criterion plumbing exposes suites and runs one criterion") {
    int ids[9] = {};
    int count = 0;
    REQUIRE(kc_suite_criteria("quick", ids, &count) == KC_OK);
    REQUIRE(count == 3);
    CHECK(ids[0] == 1);
    CHECK(ids[2] == 3);
    REQUIRE(kc_suite_criteria("order8", ids, &count) == KC_OK);
    CHECK(count == 4);
    REQUIRE(kc_suite_criteria("full", ids, &count) == KC_OK);
    CHECK(count == 2);
    CHECK(kc_suite_criteria("weekly", ids, &count) == KC_ERROR);

    fs::path work = fresh_dir("kcover-capi-criterion");
    int pass = 0;
    double seconds = -1;
    char* tier = nullptr;
    char* summary = nullptr;
    REQUIRE(kc_run_criterion(1, work.c_str(), 1, nullptr, nullptr, &pass, &seconds, &tier,
                             &summary) == KC_OK);
    CHECK(pass == 1);
    CHECK(seconds >= 0);
    CHECK(std::string(tier) == "quick");
    CHECK(std::string(summary).find("K5") != std::string::npos);
    kc_string_free(tier);
    kc_string_free(summary);
}
