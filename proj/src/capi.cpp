#include "kcover.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "corpus.hpp"
#include "covering.hpp"
#include "dot.hpp"
#include "embed.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "names.hpp"
#include "obstruction.hpp"
#include "surface.hpp"
#include "version.hpp"

namespace fs = std::filesystem;

struct kc_graph {
    kcover::Graph g;
};

struct kc_engine {
    kcover::Engine e;
    explicit kc_engine(bool cache) : e(cache) {}
};

namespace {

thread_local std::string t_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Run `body` with the extern-C exception wall: any escaping exception
/// becomes KC_ERROR with its message in kc_last_error().
template <typename F>
kc_status guarded(F&& body) {
    try {
        t_error.clear();
        return body();
    } catch (const std::exception& e) {
        t_error = e.what();
        return KC_ERROR;
    } catch (...) {
        t_error = "unknown failure";
        return KC_ERROR;
    }
}

kcover::Graph union_of(const kcover::Graph& host,
                       const std::vector<kcover::KuratowskiSubgraph>& members,
                       const std::vector<int>& which) {
    kcover::Graph u(host.order());
    for (int i : which)
        for (auto [a, b] : members[size_t(i)].edges) u.add_edge(a, b);
    return u;
}

}  // namespace

extern "C" {

const char* kc_version(void) { return kcover::version_string; }

const char* kc_last_error(void) { return t_error.c_str(); }

void kc_string_free(char* s) { std::free(s); }

kc_graph* kc_graph_parse(const char* text) {
    if (!text) {
        t_error = "null graph text";
        return nullptr;
    }
    std::string name_error;
    try {
        t_error.clear();
        return new kc_graph{kcover::parse_name(text)};
    } catch (const std::exception& e) {
        name_error = e.what();
    }
    try {
        return new kc_graph{kcover::parse_graph6(text)};
    } catch (const std::exception& e) {
        t_error = std::string("not a graph name (") + name_error + ") and not graph6 (" +
                  e.what() + ")";
        return nullptr;
    }
}

void kc_graph_free(kc_graph* g) { delete g; }

int kc_graph_order(const kc_graph* g) { return g ? g->g.order() : 0; }

int kc_graph_edge_count(const kc_graph* g) { return g ? g->g.edge_count() : 0; }

kc_status kc_graph_to_graph6(const kc_graph* g, char** out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null argument");
        *out = dup_string(kcover::write_graph6(g->g));
        return KC_OK;
    });
}

kc_engine* kc_engine_new(int use_cache_dir) {
    try {
        t_error.clear();
        return new kc_engine(use_cache_dir != 0);
    } catch (const std::exception& e) {
        t_error = e.what();
        return nullptr;
    }
}

void kc_engine_free(kc_engine* e) { delete e; }

uint64_t kc_engine_nodes(const kc_engine* e) { return e ? e->e.nodes_explored() : 0; }

kc_status kc_embeds(kc_engine* e, const kc_graph* g, const char* surface, int* out_embeds) {
    return guarded([&] {
        if (!e || !g || !surface || !out_embeds) throw std::invalid_argument("null argument");
        *out_embeds = e->e.embeds(g->g, kcover::parse_surface(surface)) ? 1 : 0;
        return KC_OK;
    });
}

kc_status kc_orientable_genus(kc_engine* e, const kc_graph* g, int* out_genus) {
    return guarded([&] {
        if (!e || !g || !out_genus) throw std::invalid_argument("null argument");
        *out_genus = e->e.orientable_genus(g->g);
        return KC_OK;
    });
}

kc_status kc_nonorientable_genus(kc_engine* e, const kc_graph* g, int* out_genus,
                                 int* out_planar) {
    return guarded([&] {
        if (!e || !g || !out_genus || !out_planar) throw std::invalid_argument("null argument");
        kcover::NonorientableGenus ng = e->e.nonorientable_genus(g->g);
        *out_genus = ng.genus;
        *out_planar = ng.planar ? 1 : 0;
        return KC_OK;
    });
}

kc_status kc_is_obstruction(kc_engine* e, const kc_graph* g, const char* surface,
                            int* out_is) {
    return guarded([&] {
        if (!e || !g || !surface || !out_is) throw std::invalid_argument("null argument");
        auto rec = kcover::is_obstruction(g->g, kcover::parse_surface(surface), e->e);
        *out_is = (rec.fails_surface && rec.minimal) ? 1 : 0;
        return KC_OK;
    });
}

kc_status kc_generate_obstructions(int order, const char* surface, const char* out_dir,
                                   const char* checkpoint_dir, int jobs,
                                   kc_progress_fn progress, void* user,
                                   uint64_t* out_count) {
    return guarded([&] {
        if (!surface || !out_dir || !out_count) throw std::invalid_argument("null argument");
        if (order < 4 || order > 9)
            throw std::invalid_argument("unsupported order (4 through 9)");
        kcover::Surface s = kcover::parse_surface(surface);
        kcover::Engine eng(true);
        kcover::GenerateOptions opts;
        opts.jobs = jobs;
        if (checkpoint_dir && *checkpoint_dir) {
            opts.checkpoint_dir = checkpoint_dir;
            fs::create_directories(opts.checkpoint_dir);
        }
        if (progress) {
            opts.progress = [&](const kcover::GenerationProgress& p) {
                progress(p.edges, p.classes, p.candidates, p.found, user);
            };
        }
        auto records = kcover::generate_obstructions(order, s, eng, opts);
        fs::create_directories(out_dir);
        std::string stem = std::string("obstructions-") + kcover::format_surface(s) + "-o" +
                           std::to_string(order);
        fs::path base = fs::path(out_dir) / stem;
        kcover::write_catalog(records, order, s, base.string() + ".g6",
                              base.string() + ".json");
        *out_count = records.size();
        return KC_OK;
    });
}

kc_status kc_find_covering(const kc_graph* g, const char* host_name, int gtilde,
                           const char* cert_path, uint64_t pool_limit, int* out_status,
                           int* out_members) {
    return guarded([&] {
        if (!g || !cert_path || !out_status || !out_members)
            throw std::invalid_argument("null argument");
        kcover::Engine eng(true);
        kcover::CoverSearchConfig cfg;
        if (pool_limit > 0) cfg.pool_limit = pool_limit;
        auto outcome = kcover::find_covering(g->g, gtilde, eng, cfg);
        *out_members = 0;
        switch (outcome.status) {
            case kcover::CoverStatus::Found: {
                std::string name = host_name && *host_name ? host_name : g->g.name();
                kcover::write_certificate(*outcome.certificate, name, cfg, cert_path);
                *out_status = KC_COVER_FOUND;
                *out_members = int(outcome.certificate->members.size());
                break;
            }
            case kcover::CoverStatus::None:
                *out_status = KC_COVER_NONE;
                break;
            case kcover::CoverStatus::Undecided:
                *out_status = KC_COVER_UNDECIDED;
                break;
        }
        return KC_OK;
    });
}

kc_status kc_verify_certificate(const char* cert_path, int* out_pass, char** out_detail) {
    if (!cert_path || !out_pass || !out_detail) {
        t_error = "null argument";
        return KC_ERROR;
    }
    try {
        t_error.clear();
        auto v = kcover::verify_certificate(cert_path);
        *out_pass = v.pass() ? 1 : 0;
        const char* detail = "pass";
        if (!v.report.arity_ok)
            detail = "arity";
        else if (!v.report.members_ok)
            detail = "members";
        else if (!v.report.coverage_ok)
            detail = "coverage";
        else if (!v.report.pairs_ok)
            detail = "pair-embeds";
        else if (!v.report.triples_ok)
            detail = "triple-embeds";
        else if (!v.recorded_match)
            detail = "recorded-results";
        *out_detail = dup_string(detail);
        return KC_OK;
    } catch (const kcover::CertificateError& e) {
        t_error = e.what();
        return KC_MALFORMED;
    } catch (const std::exception& e) {
        t_error = e.what();
        return KC_ERROR;
    }
}

kc_status kc_certificate_dot(const char* cert_path, const char* out_dir, int* out_files) {
    return guarded([&] {
        if (!cert_path || !out_dir || !out_files) throw std::invalid_argument("null argument");
        kcover::StoredCertificate sc = kcover::read_certificate(cert_path);
        const auto& cert = sc.certificate;
        fs::create_directories(out_dir);
        int files = 0;
        auto emit = [&](const std::string& stem, const std::string& text) {
            fs::path p = fs::path(out_dir) / (stem + ".dot");
            std::FILE* f = std::fopen(p.c_str(), "w");
            if (!f) throw std::runtime_error("cannot write " + p.string());
            std::fwrite(text.data(), 1, text.size(), f);
            std::fclose(f);
            ++files;
        };
        for (size_t i = 0; i < cert.members.size(); ++i) {
            const auto& m = cert.members[i];
            emit("member-" + std::to_string(i),
                 kcover::to_dot(cert.host, "member-" + std::to_string(i), m.edges,
                                m.branch_vertices));
        }
        for (const auto& pr : cert.pair_results) {
            std::string stem = "pair-" + std::to_string(pr.members[0]) + "-" +
                               std::to_string(pr.members[1]);
            emit(stem, kcover::to_dot(union_of(cert.host, cert.members, pr.members), stem));
        }
        std::set<std::vector<int>> seen;
        for (const auto& tr : cert.triple_results) {
            if (!seen.insert(tr.members).second) continue;
            std::string stem = "triple-" + std::to_string(tr.members[0]) + "-" +
                               std::to_string(tr.members[1]) + "-" +
                               std::to_string(tr.members[2]);
            emit(stem, kcover::to_dot(union_of(cert.host, cert.members, tr.members), stem));
        }
        *out_files = files;
        return KC_OK;
    });
}

kc_status kc_suite_criteria(const char* suite, int out_ids[9], int* out_count) {
    return guarded([&] {
        if (!suite || !out_ids || !out_count) throw std::invalid_argument("null argument");
        auto ids = kcover::tier_criteria(suite);
        *out_count = int(ids.size());
        for (size_t i = 0; i < ids.size(); ++i) out_ids[i] = ids[i];
        return KC_OK;
    });
}

kc_status kc_run_criterion(int id, const char* work_dir, int jobs, kc_log_fn log,
                           void* user, int* out_pass, double* out_seconds,
                           char** out_tier, char** out_summary) {
    return guarded([&] {
        if (!out_pass || !out_seconds || !out_tier || !out_summary)
            throw std::invalid_argument("null argument");
        std::function<void(const std::string&)> logger;
        if (log) logger = [&](const std::string& line) { log(line.c_str(), user); };
        auto res = kcover::run_criterion(id, work_dir ? work_dir : "", logger, jobs);
        *out_pass = res.pass ? 1 : 0;
        *out_seconds = res.seconds;
        *out_tier = dup_string(res.tier);
        *out_summary = dup_string(res.summary);
        return KC_OK;
    });
}

}  // extern "C"
