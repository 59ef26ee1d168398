#include "corpus.hpp"

#include <chrono>
#include <filesystem>
#include <set>
#include <stdexcept>

#include "canon.hpp"
#include "certificate.hpp"
#include "covering.hpp"
#include "embed.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "kuratowski.hpp"
#include "names.hpp"
#include "obstruction.hpp"
#include "scheme.hpp"
#include "surface.hpp"

namespace fs = std::filesystem;

namespace kcover {

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"K5", "D~{", "sphere", "obstruction"},
        {"K3,3", "EFz_", "sphere", "obstruction"},
        {"K8-K3", "GF~~~{", "torus", "obstruction"},
        {"K8-(K1,2u2K2)", "GNz~v{", "torus", "obstruction"},
        {"K8-K2,3", "G`N~~{", "torus", "obstruction"},
        {"K8-(K1,4uK3)", "GJ^~vo", "n2", "obstruction"},
        {"K8-2K3", "GFzf~{", "n2", "obstruction"},
        {"K8-2K1,3", "GJ~vnk", "n2", "obstruction"},
        {"K8-4K2", "G]~v~w", "n2", "obstruction"},
        {"K8-(K3vK2)", "GE~~~{", "n2", "obstruction"},
        {"K8-K2", "G^~~~{", "n3", "obstruction cover-target"},
        {"K9-K1,2", "HN~~~~~", "n4", "obstruction cover-target"},
        {"K9-2K2", "H]~~~~~", "n4", "obstruction cover-target"},
    };
    return entries;
}

std::vector<int> tier_criteria(const std::string& tier) {
    if (tier == "quick") return {1, 2, 3};
    if (tier == "order8") return {4, 5, 6, 7};
    if (tier == "full") return {8, 9};
    throw std::invalid_argument("unknown tier: " + tier);
}

namespace {

/// Pass/fail accumulator: collects the first few failure details and
/// otherwise keeps the success summary handed to finish().
struct Outcome {
    bool pass = true;
    std::string detail;
    int dropped = 0;

    void fail(const std::string& msg) {
        pass = false;
        if (dropped == 0 && detail.size() < 400) {
            if (!detail.empty()) detail += "; ";
            detail += msg;
        } else {
            ++dropped;
        }
    }

    std::string finish(const std::string& success) const {
        if (pass) return success;
        std::string out = detail;
        if (dropped > 0) out += "; +" + std::to_string(dropped) + " more";
        return out;
    }
};

Graph subdivide_first_edge(const Graph& g) {
    auto [u, v] = g.edges().front();
    Graph h(g.order() + 1);
    for (auto [a, b] : g.edges())
        if (!(a == u && b == v)) h.add_edge(a, b);
    h.add_edge(u, g.order());
    h.add_edge(v, g.order());
    return h;
}

std::vector<CorpusEntry> entries_for(const std::string& surface) {
    std::vector<CorpusEntry> out;
    for (const auto& e : corpus())
        if (e.surface == surface) out.push_back(e);
    return out;
}

/// Exhaustive domain for the oracle comparison: every connected
/// isomorphism class with at most 7 vertices and 11 edges (every
/// suppressed graph with <= 11 edges and minimum degree 3 has <= 7
/// vertices; the rest are homeomorphic to these or to trees).
std::vector<Graph> oracle_domain() {
    std::set<CanonicalForm> seen;
    std::vector<Graph> domain;
    for (auto& level : all_graph_classes(7, 11)) {
        for (auto& g : level) {
            Graph h = remove_isolated(g);
            if (h.order() == 0 || !is_connected(h)) continue;
            if (!seen.insert(canonical_form(h)).second) continue;
            domain.push_back(h);
        }
    }
    return domain;
}

bool profile_says(const OracleProfile& p, const Surface& s) {
    int k = s.euler_genus();
    if (s.orientable) return p.orientable_eg <= k;
    return p.nonorientable_eg <= k || p.orientable_eg <= k - 1;
}

Outcome criterion1(Engine& eng) {
    Outcome out;
    Graph k5 = make_complete(5);
    Graph k33 = make_complete_bipartite(3, 3);
    int others = 0;
    for (int order = 4; order <= 6; ++order) {
        auto found = generate_obstructions(order, Surface{true, 0}, eng);
        size_t expect = order == 4 ? 0 : 1;
        if (found.size() != expect) {
            out.fail("order " + std::to_string(order) + ": " +
                     std::to_string(found.size()) + " sphere obstructions");
            continue;
        }
        if (order == 5 && !is_isomorphic(found[0].graph, k5)) out.fail("order 5 is not K5");
        if (order == 6 && !is_isomorphic(found[0].graph, k33)) out.fail("order 6 is not K3,3");

        int max_edges = order * (order - 1) / 2;
        for (auto& level : all_graph_classes(order, max_edges)) {
            for (auto& g : level) {
                if (g.min_degree() < 3 || !is_connected(g)) continue;
                if (is_isomorphic(g, k5) || is_isomorphic(g, k33)) continue;
                ++others;
                bool planar = eng.embeds(g, Surface{true, 0});
                if (planar == contains_kuratowski(g))
                    out.fail("class of order " + std::to_string(order) +
                             " breaks the planarity dichotomy");
            }
        }
    }
    return out.pass ? Outcome{true,
                              "sphere obstructions through order 6 are K5 and K3,3; " +
                                  std::to_string(others) +
                                  " other connected min-degree-3 classes all embed or "
                                  "contain a Kuratowski subgraph",
                              0}
                    : out;
}

Outcome criterion2(Engine& eng) {
    Outcome out;
    auto domain = oracle_domain();
    const Surface surfaces[] = {Surface{true, 0}, Surface{false, 1}, Surface{true, 1},
                                Surface{false, 2}};
    for (const auto& g : domain) {
        OracleProfile p = oracle_profile(g);
        for (const auto& s : surfaces) {
            if (eng.embeds(g, s) != profile_says(p, s))
                out.fail("engine disagrees with the oracle on " + write_graph6(g) + " / " +
                         format_surface(s));
        }
        if (eng.orientable_genus(g) * 2 != p.orientable_eg)
            out.fail("orientable genus off on " + write_graph6(g));
        NonorientableGenus ng = eng.nonorientable_genus(g);
        if (ng.planar != (p.orientable_eg == 0))
            out.fail("planarity flag off on " + write_graph6(g));
        if (!ng.planar && ng.genus != std::min(p.nonorientable_eg, p.orientable_eg + 1))
            out.fail("nonorientable genus off on " + write_graph6(g));
    }
    return out.pass
               ? Outcome{true,
                         "engine matches the scheme-enumeration oracle on " +
                             std::to_string(domain.size()) +
                             " connected classes (<=7 vertices, <=11 edges) across sphere, "
                             "N1, torus, N2, plus both genus invariants",
                         0}
               : out;
}

Outcome criterion3(Engine& eng) {
    Outcome out;
    for (const auto& entry : corpus()) {
        Graph g = parse_name(entry.name);
        Surface s = parse_surface(entry.surface);
        int k = s.euler_genus();
        Surface above{false, k + 1};

        auto witness = eng.find_embedding(g, above);
        if (!witness) {
            out.fail(entry.name + " found no embedding in " + format_surface(above));
            continue;
        }
        validate_scheme(g, *witness);
        if (!scheme_fits(g, *witness, above)) out.fail(entry.name + " witness does not fit");
        size_t sides = 0;
        for (const auto& face : trace_faces(g, *witness)) sides += face.size();
        if (sides != size_t(2 * g.edge_count()))
            out.fail(entry.name + " face sides != 2E");
        int weg = scheme_euler_genus(g, *witness);
        if (scheme_orientable(g, *witness) && weg % 2 != 0)
            out.fail(entry.name + " orientable witness with odd Euler genus");

        if (!eng.embeds(g, Surface{false, k + 2}))
            out.fail(entry.name + " breaks crosscap monotonicity");

        Graph sub = subdivide_first_edge(g);
        if (!is_isomorphic(suppress_degree2(sub), g))
            out.fail(entry.name + " subdivision does not suppress back");
        if (!eng.embeds(sub, above))
            out.fail(entry.name + " subdivision breaks suppression invariance");
        if (k <= 2 && eng.embeds(sub, s))
            out.fail(entry.name + " subdivision embeds where the graph does not");

        auto edges = g.edges();
        size_t picks[] = {0, edges.size() / 2, edges.size() - 1};
        for (size_t pi : picks) {
            Graph h = delete_edge(g, edges[pi].first, edges[pi].second);
            if (!eng.embeds(h, above))
                out.fail(entry.name + " breaks subgraph monotonicity");
            if (!eng.embeds(h, s))
                out.fail(entry.name + " minus an edge still fails " + entry.surface);
        }
    }
    return out.pass ? Outcome{true,
                              "witness faces, Euler parity, crosscap steps, suppression, "
                              "and edge deletions hold on all " +
                                  std::to_string(corpus().size()) + " corpus graphs",
                              0}
                    : out;
}

/// Shared order-8 generation check: the obstructions for `surface` must
/// be exactly the corpus entries carrying that surface token.
Outcome order8_generation(Engine& eng, const std::string& surface,
                          const std::function<void(const std::string&)>& log, int jobs) {
    Outcome out;
    auto expected = entries_for(surface);
    Surface s = parse_surface(surface);
    GenerateOptions opts;
    opts.jobs = jobs;
    if (log) {
        opts.progress = [&](const GenerationProgress& p) {
            log("order 8 " + surface + ": " + std::to_string(p.edges) + " edges, " +
                std::to_string(p.classes) + " classes, " + std::to_string(p.found) +
                " found");
        };
    }
    auto records = generate_obstructions(8, s, eng, opts);
    if (records.size() != expected.size())
        out.fail(surface + ": found " + std::to_string(records.size()) + " classes, expected " +
                 std::to_string(expected.size()));
    std::string matched;
    for (const auto& e : expected) {
        Graph want = parse_name(e.name);
        int hits = 0;
        for (const auto& r : records)
            if (is_isomorphic(r.graph, want)) ++hits;
        if (hits != 1) {
            out.fail(e.name + " matched " + std::to_string(hits) + " generated classes");
        } else {
            if (!matched.empty()) matched += ", ";
            matched += e.name;
        }
    }
    return out.pass ? Outcome{true, "order-8 " + surface + " obstructions: " + matched, 0} : out;
}

/// Covering half of criteria 6-8: find, check, write, and re-verify a
/// covering certificate for one host.
Outcome cover_and_verify(Engine& eng, const Graph& host, const std::string& host_name,
                         int gtilde, const fs::path& work) {
    Outcome out;
    auto result = find_covering(host, gtilde, eng);
    if (result.status != CoverStatus::Found) {
        out.fail(host_name + ": no covering found (pool " + std::to_string(result.pool_size) +
                 (result.pool_truncated ? ", truncated)" : ")"));
        return out;
    }
    const auto& cert = *result.certificate;
    if (int(cert.members.size()) != gtilde + 1)
        out.fail(host_name + ": certificate has " + std::to_string(cert.members.size()) +
                 " members");
    auto report = check_covering(host, cert.members, gtilde, eng);
    if (!report.pass()) out.fail(host_name + ": covering conditions fail on recheck");
    fs::path path = work / ("covering-" + host_name + ".json");
    write_certificate(cert, host_name, CoverSearchConfig{}, path.string());
    auto verification = verify_certificate(path.string());
    if (!verification.pass()) out.fail(host_name + ": certificate failed cold verification");
    if (out.pass)
        out.detail = std::to_string(cert.members.size()) + "-member covering of " + host_name +
                     " verified from " + path.filename().string();
    return out;
}

Outcome criterion6(Engine& eng, const fs::path& work,
                   const std::function<void(const std::string&)>& log, int jobs) {
    Outcome out = order8_generation(eng, "n3", log, jobs);
    if (!out.pass) return out;
    std::string gen_summary = out.detail.empty() ? std::string("order-8 n3: K8-K2") : out.detail;
    Outcome cov = cover_and_verify(eng, parse_name("K8-K2"), "K8-K2", 3, work);
    if (!cov.pass) return cov;
    return Outcome{true, gen_summary + "; " + cov.detail, 0};
}

Outcome criterion7(Engine& eng, const fs::path& work) {
    Outcome out;
    std::string summary;
    for (const auto* name : {"K9-K1,2", "K9-2K2"}) {
        Graph g = parse_name(name);
        auto record = is_obstruction(g, Surface{false, 4}, eng);
        if (!record.fails_surface) out.fail(std::string(name) + " embeds in N4");
        if (!record.minimal) out.fail(std::string(name) + " is not deletion-minimal");
        Outcome cov = cover_and_verify(eng, g, name, 4, work);
        if (!cov.pass) {
            out.fail(cov.detail);
            continue;
        }
        if (!summary.empty()) summary += "; ";
        summary += cov.detail;
    }
    return out.pass ? Outcome{true, "K9-K1,2 and K9-2K2 are N4-minimal; " + summary, 0} : out;
}

Outcome order9_generation(Engine& eng, const std::string& surface, int expected,
                          bool covers, const fs::path& work,
                          const std::function<void(const std::string&)>& log, int jobs) {
    Outcome out;
    Surface s = parse_surface(surface);
    GenerateOptions opts;
    opts.jobs = jobs;
    opts.checkpoint_dir = (work / ("gen-" + surface + "-o9")).string();
    if (log) {
        opts.progress = [&](const GenerationProgress& p) {
            log("order 9 " + surface + ": " + std::to_string(p.edges) + " edges, " +
                std::to_string(p.classes) + " classes, " + std::to_string(p.candidates) +
                " candidates, " + std::to_string(p.found) + " found");
        };
    }
    auto records = generate_obstructions(9, s, eng, opts);
    std::string count_note = "order-9 " + surface + " obstructions: " +
                             std::to_string(records.size()) + " (expected " +
                             std::to_string(expected) + ")";
    if (records.empty()) out.fail(count_note);
    if (int(records.size()) != expected) {
        if (covers) {
            if (log) log("WARNING " + count_note);
        } else {
            out.fail(count_note);
        }
    }
    if (covers) {
        int done = 0;
        for (const auto& r : records) {
            Outcome cov = cover_and_verify(eng, r.graph, r.catalog_id, s.euler_genus(), work);
            if (!cov.pass) {
                out.fail(cov.detail);
                continue;
            }
            ++done;
            if (log) log(cov.detail);
        }
        if (out.pass)
            return Outcome{true,
                           count_note + "; all " + std::to_string(done) +
                               " coverings found and certificates re-verified",
                           0};
        return out;
    }
    return out.pass ? Outcome{true, count_note, 0} : out;
}

}  // namespace

CriterionResult run_criterion(int id, const std::string& work_dir,
                              const std::function<void(const std::string&)>& log, int jobs) {
    fs::path work = work_dir.empty() ? fs::temp_directory_path() / "kcover-corpus"
                                     : fs::path(work_dir);
    fs::create_directories(work);
    Engine eng(true);

    CriterionResult res;
    res.id = id;
    if (id >= 1 && id <= 3)
        res.tier = "quick";
    else if (id >= 4 && id <= 7)
        res.tier = "order8";
    else if (id == 8 || id == 9)
        res.tier = "full";
    else
        throw std::invalid_argument("unknown criterion id: " + std::to_string(id));

    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        switch (id) {
            case 1: out = criterion1(eng); break;
            case 2: out = criterion2(eng); break;
            case 3: out = criterion3(eng); break;
            case 4: out = order8_generation(eng, "torus", log, jobs); break;
            case 5: out = order8_generation(eng, "n2", log, jobs); break;
            case 6: out = criterion6(eng, work, log, jobs); break;
            case 7: out = criterion7(eng, work); break;
            case 8: out = order9_generation(eng, "n3", 16, true, work, log, jobs); break;
            case 9: out = order9_generation(eng, "n2", 63, false, work, log, jobs); break;
        }
    } catch (const std::exception& e) {
        out = Outcome{};
        out.fail(std::string("exception: ") + e.what());
    }
    res.pass = out.pass;
    res.summary = out.pass ? out.finish(out.detail) : out.finish("");
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::vector<CriterionResult> run_tier(
    const std::string& tier, const std::string& work_dir,
    const std::function<void(const CriterionResult&)>& on_done,
    const std::function<void(const std::string&)>& log, int jobs) {
    std::vector<CriterionResult> results;
    for (int id : tier_criteria(tier)) {
        results.push_back(run_criterion(id, work_dir, log, jobs));
        if (on_done) on_done(results.back());
    }
    return results;
}

}  // namespace kcover
