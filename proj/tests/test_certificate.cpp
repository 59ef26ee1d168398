#include <filesystem>
#include <fstream>

#include "certificate.hpp"
#include "covering.hpp"
#include "doctest.h"
#include "embed.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "json.hpp"
#include "names.hpp"
#include "version.hpp"

using namespace kcover;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "kcover-cert-test";
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

CoveringCertificate make_small_cert(Engine& eng) {
    Graph host = disjoint_union(make_complete(5), make_complete(5));
    CoverOutcome out = find_covering(host, 1, eng);
    REQUIRE(out.status == CoverStatus::Found);
    return *out.certificate;
}

// Load, mutate, and rewrite a certificate file as raw JSON.
void rewrite(const std::string& path,
             const std::function<void(nlohmann::json&)>& mutate) {
    std::ifstream in(path);
    nlohmann::json j = nlohmann::json::parse(in);
    in.close();
    mutate(j);
    std::ofstream out(path, std::ios::trunc);
    out << j.dump(2) << "\n";
}

}  // namespace

TEST_CASE("hash is stable fnv-1a") {
    CHECK(certificate_hash("") == 14695981039346656037ull);
    CHECK(certificate_hash("a") == 0xaf63dc4c8601ec8cull);
    CHECK(certificate_hash("ab") != certificate_hash("ba"));
}

TEST_CASE("certificates round-trip losslessly") {
    TempDir dir;
    Engine eng(false);
    CoveringCertificate cert = make_small_cert(eng);
    std::string path = dir.file("pair.cert.json");
    write_certificate(cert, "two disjoint K5", {}, path);

    StoredCertificate sc = read_certificate(path);
    CHECK(sc.host_name == "two disjoint K5");
    CHECK(sc.engine_version == version_string);
    CHECK(sc.config.pool_limit == CoverSearchConfig{}.pool_limit);
    CHECK(write_graph6(sc.certificate.host) == write_graph6(cert.host));
    CHECK(sc.certificate.gtilde == 1);
    REQUIRE(sc.certificate.members.size() == cert.members.size());
    for (size_t i = 0; i < cert.members.size(); ++i) {
        CHECK(sc.certificate.members[i].kind == cert.members[i].kind);
        CHECK(sc.certificate.members[i].branch_vertices ==
              cert.members[i].branch_vertices);
        CHECK(sc.certificate.members[i].paths == cert.members[i].paths);
        CHECK(sc.certificate.members[i].edges == cert.members[i].edges);
    }
    CHECK(sc.certificate.coverage == cert.coverage);

    CertificateVerification v = verify_certificate(path);
    CHECK(v.report.pass());
    CHECK(v.recorded_match);
    CHECK(v.pass());
}

TEST_CASE("a found covering verifies cold from disk") {
    TempDir dir;
    std::string path = dir.file("k8.cert.json");
    {
        Engine eng(false);
        Graph g = parse_name("K8-K2");
        CoverOutcome out = find_covering(g, 3, eng);
        REQUIRE(out.status == CoverStatus::Found);
        write_certificate(*out.certificate, "K8-K2", {}, path);
    }
    CertificateVerification v = verify_certificate(path);
    CHECK(v.pass());
    CHECK(v.report.pair_results.size() == 6);
    CHECK(v.report.triple_results.size() == 8);
}

TEST_CASE("tampering is caught and named") {
    TempDir dir;
    Engine eng(false);
    CoveringCertificate cert = make_small_cert(eng);
    std::string path = dir.file("t.cert.json");

    SUBCASE("member path rewired") {
        write_certificate(cert, "", {}, path);
        rewrite(path, [](nlohmann::json& j) {
            // Reroute one path through a vertex of the other component.
            auto& p = j["members"][0]["paths"][0];
            int a = p[0], b = p[1];
            p = {a, 9, b};
        });
        CertificateVerification v = verify_certificate(path);
        CHECK_FALSE(v.report.members_ok);
        CHECK_FALSE(v.pass());
    }

    SUBCASE("recorded outcome flipped") {
        write_certificate(cert, "", {}, path);
        rewrite(path, [](nlohmann::json& j) {
            j["pair_results"][0]["embeds"] = true;
        });
        CertificateVerification v = verify_certificate(path);
        CHECK(v.report.pass());       // the covering itself is fine
        CHECK_FALSE(v.recorded_match);  // but the file lies about the probe
        CHECK_FALSE(v.pass());
    }

    SUBCASE("coverage witness redirected") {
        write_certificate(cert, "", {}, path);
        rewrite(path, [](nlohmann::json& j) {
            j["coverage"][0] = 1;  // member 1 does not touch edge 0
        });
        CertificateVerification v = verify_certificate(path);
        CHECK(v.report.pass());
        CHECK_FALSE(v.recorded_match);
    }

    SUBCASE("host graph swapped") {
        write_certificate(cert, "", {}, path);
        rewrite(path, [](nlohmann::json& j) {
            j["host"]["graph6"] = write_graph6(make_complete(5));
        });
        CHECK_THROWS_AS(read_certificate(path), CertificateError);
    }

    SUBCASE("missing field") {
        write_certificate(cert, "", {}, path);
        rewrite(path, [](nlohmann::json& j) { j.erase("gtilde"); });
        CHECK_THROWS_AS(read_certificate(path), CertificateError);
    }

    SUBCASE("wrong format tag") {
        write_certificate(cert, "", {}, path);
        rewrite(path,
                [](nlohmann::json& j) { j["format"] = "something-else"; });
        CHECK_THROWS_AS(read_certificate(path), CertificateError);
    }

    SUBCASE("truncated file") {
        write_certificate(cert, "", {}, path);
        std::error_code ec;
        fs::resize_file(path, 40, ec);
        REQUIRE(!ec);
        CHECK_THROWS_AS(read_certificate(path), CertificateError);
    }

    SUBCASE("absent file") {
        CHECK_THROWS_AS(read_certificate(dir.file("nope.json")),
                        CertificateError);
    }
}
