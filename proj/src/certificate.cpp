#include "certificate.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <utility>
#include <vector>

#include "graph6.hpp"
#include "json.hpp"
#include "surface.hpp"
#include "version.hpp"

namespace kcover {

namespace {

constexpr const char* kFormat = "kcover-covering-certificate";
constexpr int kFormatVersion = 1;

std::string hash_hex(uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

nlohmann::json probe_json(const UnionProbe& p) {
    return {{"members", p.members},
            {"surface", format_surface(p.surface)},
            {"embeds", p.embeds}};
}

// Key that identifies a probe regardless of list order in the file.
using ProbeKey = std::pair<std::vector<int>, std::string>;

std::map<ProbeKey, bool> probe_map(const std::vector<UnionProbe>& probes) {
    std::map<ProbeKey, bool> out;
    for (const UnionProbe& p : probes) {
        auto key = ProbeKey{p.members, format_surface(p.surface)};
        std::sort(key.first.begin(), key.first.end());
        out[key] = p.embeds;
    }
    return out;
}

}  // namespace

uint64_t certificate_hash(const std::string& graph6) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : graph6) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void write_certificate(const CoveringCertificate& cert,
                       const std::string& host_name,
                       const CoverSearchConfig& config,
                       const std::string& path) {
    std::string g6 = write_graph6(cert.host);
    nlohmann::json j;
    j["format"] = kFormat;
    j["format_version"] = kFormatVersion;
    j["engine_version"] = version_string;
    j["host"] = {{"order", cert.host.order()},
                 {"name", host_name},
                 {"graph6", g6},
                 {"hash", hash_hex(certificate_hash(g6))},
                 {"edges", cert.host.edges()}};
    j["gtilde"] = cert.gtilde;
    j["members"] = nlohmann::json::array();
    for (const KuratowskiSubgraph& m : cert.members) {
        j["members"].push_back({{"kind", kind_name(m.kind)},
                                {"branch_vertices", m.branch_vertices},
                                {"paths", m.paths}});
    }
    j["coverage"] = cert.coverage;
    j["pair_results"] = nlohmann::json::array();
    for (const UnionProbe& p : cert.pair_results) {
        j["pair_results"].push_back(probe_json(p));
    }
    j["triple_results"] = nlohmann::json::array();
    for (const UnionProbe& p : cert.triple_results) {
        j["triple_results"].push_back(probe_json(p));
    }
    j["config"] = {{"pool_limit", config.pool_limit}};

    std::ofstream out(path, std::ios::trunc);
    if (!out) throw CertificateError("cannot write " + path);
    out << j.dump(2) << "\n";
}

namespace {

std::vector<UnionProbe> read_probes(const nlohmann::json& arr, size_t members,
                                    size_t want_size, const char* what) {
    std::vector<UnionProbe> out;
    for (const auto& pj : arr) {
        UnionProbe p;
        p.members = pj.at("members").get<std::vector<int>>();
        p.surface = parse_surface(pj.at("surface").get<std::string>());
        p.embeds = pj.at("embeds").get<bool>();
        if (p.members.size() != want_size) {
            throw CertificateError(std::string(what) + ": wrong union size");
        }
        for (int m : p.members) {
            if (m < 0 || size_t(m) >= members) {
                throw CertificateError(std::string(what) +
                                       ": member index out of range");
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

StoredCertificate read_certificate(const std::string& path) {
    nlohmann::json j;
    {
        std::ifstream in(path);
        if (!in) throw CertificateError("cannot open " + path);
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw CertificateError(std::string("not valid JSON: ") + e.what());
        }
    }

    StoredCertificate sc;
    CoveringCertificate& cert = sc.certificate;
    try {
        if (j.at("format").get<std::string>() != kFormat) {
            throw CertificateError("not a covering certificate file");
        }
        if (j.at("format_version").get<int>() != kFormatVersion) {
            throw CertificateError("unsupported certificate format version");
        }
        sc.engine_version = j.at("engine_version").get<std::string>();
        sc.config.pool_limit = j.at("config").at("pool_limit").get<size_t>();

        const auto& host = j.at("host");
        sc.host_name = host.at("name").get<std::string>();
        std::string g6 = host.at("graph6").get<std::string>();
        if (host.at("hash").get<std::string>() !=
            hash_hex(certificate_hash(g6))) {
            throw CertificateError("host hash mismatch");
        }
        try {
            cert.host = parse_graph6(g6);
        } catch (const std::exception& e) {
            throw CertificateError(std::string("bad host graph6: ") + e.what());
        }
        if (host.at("order").get<int>() != cert.host.order()) {
            throw CertificateError("host order disagrees with graph6");
        }
        auto edges =
            host.at("edges").get<std::vector<std::pair<int, int>>>();
        if (edges != cert.host.edges()) {
            throw CertificateError("host edge list disagrees with graph6");
        }

        cert.gtilde = j.at("gtilde").get<int>();
        for (const auto& mj : j.at("members")) {
            KuratowskiSubgraph m;
            auto kind = kind_from_name(mj.at("kind").get<std::string>());
            if (!kind) throw CertificateError("unknown member kind");
            m.kind = *kind;
            m.branch_vertices =
                mj.at("branch_vertices").get<std::vector<int>>();
            m.paths = mj.at("paths").get<std::vector<std::vector<int>>>();
            for (const auto& path : m.paths) {
                for (size_t i = 1; i < path.size(); ++i) {
                    int u = path[i - 1], v = path[i];
                    m.edges.push_back({std::min(u, v), std::max(u, v)});
                }
            }
            std::sort(m.edges.begin(), m.edges.end());
            cert.members.push_back(std::move(m));
        }

        cert.coverage = j.at("coverage").get<std::vector<int>>();
        if (cert.coverage.size() != edges.size()) {
            throw CertificateError("coverage length disagrees with host edges");
        }
        for (int c : cert.coverage) {
            if (c < -1 || (c >= 0 && size_t(c) >= cert.members.size())) {
                throw CertificateError("coverage member index out of range");
            }
        }

        cert.pair_results = read_probes(j.at("pair_results"),
                                        cert.members.size(), 2, "pair result");
        cert.triple_results = read_probes(
            j.at("triple_results"), cert.members.size(), 3, "triple result");
    } catch (const nlohmann::json::exception& e) {
        throw CertificateError(std::string("missing or mistyped field: ") +
                               e.what());
    }
    return sc;
}

CertificateVerification verify_certificate(const std::string& path) {
    StoredCertificate sc = read_certificate(path);
    const CoveringCertificate& cert = sc.certificate;

    Engine eng(false);
    CertificateVerification v;
    v.report = check_covering(cert.host, cert.members, cert.gtilde, eng);
    v.recorded_match =
        cert.coverage == v.report.coverage &&
        probe_map(cert.pair_results) == probe_map(v.report.pair_results) &&
        probe_map(cert.triple_results) == probe_map(v.report.triple_results);
    return v;
}

}  // namespace kcover
