// Command-line front end. Everything substantive happens behind the C
// API in kcover.h; this file only parses flags, shapes output, and maps
// results onto exit codes:
//   0 success (embed: embeds)       1 embed: does not embed / verify:
//   conditions violated / corpus: some criterion failed
//   2 usage errors, malformed input, malformed certificates
//   3 cover: no covering found within limits

#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kcover.h"

namespace fs = std::filesystem;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// --graph values starting with '@' name a file whose first non-empty
/// line is the graph (name grammar or graph6).
std::string resolve_graph_text(const std::string& in) {
    if (in.empty() || in[0] != '@') return in;
    std::ifstream f(in.substr(1));
    if (!f) throw std::runtime_error("cannot open " + in.substr(1));
    std::string line;
    while (std::getline(f, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        size_t start = line.find_first_not_of(' ');
        if (start != std::string::npos) return line.substr(start);
    }
    throw std::runtime_error(in.substr(1) + " holds no graph line");
}

struct GraphHandle {
    kc_graph* g = nullptr;
    ~GraphHandle() { kc_graph_free(g); }
};

struct EngineHandle {
    kc_engine* e = nullptr;
    explicit EngineHandle(int cache) : e(kc_engine_new(cache)) {}
    ~EngineHandle() { kc_engine_free(e); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { kc_string_free(s); }
};

int fail(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return 2;
}

/// Certificate files default to covering-<host>.json with the host text
/// reduced to filename-safe characters.
std::string default_cert_path(const std::string& graph_text) {
    std::string safe;
    for (char c : graph_text)
        safe += (std::isalnum(static_cast<unsigned char>(c)) || c == ',' || c == '-') ? c : '_';
    return "covering-" + safe + ".json";
}

int cmd_embed(const std::string& graph_arg, const std::string& surface, bool json) {
    GraphHandle gh;
    gh.g = kc_graph_parse(resolve_graph_text(graph_arg).c_str());
    if (!gh.g) return fail(kc_last_error());
    EngineHandle eng(1);
    if (!eng.e) return fail(kc_last_error());

    auto t0 = std::chrono::steady_clock::now();
    int embeds = 0;
    if (kc_embeds(eng.e, gh.g, surface.c_str(), &embeds) != KC_OK)
        return fail(kc_last_error());
    double dt = seconds_since(t0);
    uint64_t nodes = kc_engine_nodes(eng.e);

    if (json) {
        OwnedString g6;
        kc_graph_to_graph6(gh.g, &g6.s);
        nlohmann::json out = {{"graph", graph_arg},
                              {"graph6", g6.s ? g6.s : ""},
                              {"order", kc_graph_order(gh.g)},
                              {"edges", kc_graph_edge_count(gh.g)},
                              {"surface", surface},
                              {"embeds", embeds != 0},
                              {"seconds", dt},
                              {"nodes", nodes}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("%s\n", embeds ? "true" : "false");
        std::printf("elapsed %.3fs, nodes %llu\n", dt, (unsigned long long)nodes);
    }
    return embeds ? 0 : 1;
}

int cmd_obstructions(int order, const std::string& surface, const std::string& out_dir,
                     const std::string& checkpoint, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    auto progress = [](int edges, uint64_t classes, uint64_t candidates, uint64_t found,
                       void*) {
        std::fprintf(stderr, "level %d: %llu classes, %llu candidates probed, %llu found\n",
                     edges, (unsigned long long)classes, (unsigned long long)candidates,
                     (unsigned long long)found);
    };
    uint64_t count = 0;
    if (kc_generate_obstructions(order, surface.c_str(), out_dir.c_str(),
                                 checkpoint.empty() ? nullptr : checkpoint.c_str(), jobs,
                                 progress, nullptr, &count) != KC_OK)
        return fail(kc_last_error());
    std::printf("%llu\n", (unsigned long long)count);
    std::fprintf(stderr, "catalog written under %s (%.1fs)\n", out_dir.c_str(),
                 seconds_since(t0));
    return 0;
}

int cmd_cover(const std::string& graph_arg, int gtilde, std::string cert_path,
              const std::string& dot_dir) {
    GraphHandle gh;
    gh.g = kc_graph_parse(resolve_graph_text(graph_arg).c_str());
    if (!gh.g) return fail(kc_last_error());
    if (cert_path.empty()) cert_path = default_cert_path(graph_arg);

    auto t0 = std::chrono::steady_clock::now();
    int status = 0, members = 0;
    if (kc_find_covering(gh.g, graph_arg.c_str(), gtilde, cert_path.c_str(), 0, &status,
                         &members) != KC_OK)
        return fail(kc_last_error());
    double dt = seconds_since(t0);

    if (status == KC_COVER_NONE) {
        std::printf("no covering: the member pool is exhausted (%.1fs)\n", dt);
        return 3;
    }
    if (status == KC_COVER_UNDECIDED) {
        std::printf("no covering found: member pool truncated at the search limit (%.1fs)\n",
                    dt);
        return 3;
    }
    std::printf("covering found: %d members, certificate %s (%.1fs)\n", members,
                cert_path.c_str(), dt);
    if (!dot_dir.empty()) {
        int files = 0;
        if (kc_certificate_dot(cert_path.c_str(), dot_dir.c_str(), &files) != KC_OK)
            return fail(kc_last_error());
        std::printf("wrote %d diagram files to %s\n", files, dot_dir.c_str());
    }
    return 0;
}

int cmd_verify(const std::string& cert_path) {
    int pass = 0;
    OwnedString detail;
    kc_status st = kc_verify_certificate(cert_path.c_str(), &pass, &detail.s);
    if (st == KC_MALFORMED) {
        std::fprintf(stderr, "malformed certificate: %s\n", kc_last_error());
        return 2;
    }
    if (st != KC_OK) return fail(kc_last_error());
    if (pass) {
        std::printf("pass\n");
        return 0;
    }
    std::printf("fail: %s\n", detail.s ? detail.s : "unknown");
    return 1;
}

int cmd_corpus(const std::string& suite, int jobs) {
    int ids[9] = {};
    int count = 0;
    if (kc_suite_criteria(suite.c_str(), ids, &count) != KC_OK) return fail(kc_last_error());

    fs::path work = fs::temp_directory_path() / "kcover-corpus";
    std::fprintf(stderr, "suite %s: %d criteria, artifacts under %s\n", suite.c_str(), count,
                 work.c_str());

    static std::mutex log_mutex;
    auto log = [](const char* line, void*) {
        std::lock_guard<std::mutex> hold(log_mutex);
        std::fprintf(stderr, "  %s\n", line);
    };

    std::printf("%-10s %-7s %-6s %9s  %s\n", "criterion", "tier", "result", "seconds",
                "summary");
    int failures = 0;
    for (int i = 0; i < count; ++i) {
        int pass = 0;
        double secs = 0;
        OwnedString tier, summary;
        if (kc_run_criterion(ids[i], work.c_str(), jobs, log, nullptr, &pass, &secs, &tier.s,
                             &summary.s) != KC_OK)
            return fail(kc_last_error());
        std::printf("%-10d %-7s %-6s %9.1f  %s\n", ids[i], tier.s ? tier.s : "?",
                    pass ? "PASS" : "FAIL", secs, summary.s ? summary.s : "");
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures == 0) {
        std::printf("all %d criteria passed\n", count);
        return 0;
    }
    std::printf("%d of %d criteria failed\n", failures, count);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Surface embeddings, obstruction catalogs, and Kuratowski coverings"};
    app.require_subcommand(1);

    std::string graph_arg, surface, out_path, dot_dir, cert_path, checkpoint, suite;
    int order = 0, gtilde = 0, jobs = 1;
    bool json = false;

    auto* embed = app.add_subcommand("embed", "Decide whether a graph embeds in a surface");
    embed->add_option("--graph", graph_arg, "graph name, graph6, or @file")->required();
    embed->add_option("--surface", surface, "sphere, torus, s<g>, or n<k>")->required();
    embed->add_flag("--json", json, "emit one JSON object instead of text");

    auto* obstructions =
        app.add_subcommand("obstructions", "Generate all obstructions of one order");
    obstructions->add_option("--order", order, "graph order (4 through 9)")->required();
    obstructions->add_option("--surface", surface, "target surface")->required();
    obstructions->add_option("--out", out_path, "catalog output directory (default .)");
    obstructions->add_option("--checkpoint", checkpoint,
                             "level checkpoint directory (resumes interrupted runs)");
    obstructions->add_option("--jobs", jobs, "worker threads for candidate probes");

    auto* cover = app.add_subcommand("cover", "Search for a Kuratowski covering");
    cover->add_option("--graph", graph_arg, "graph name, graph6, or @file")->required();
    cover->add_option("--gtilde", gtilde, "nonorientable genus of the host (1 through 4)")
        ->required()
        ->check(CLI::Range(1, 4));
    cover->add_option("--out", out_path, "certificate path (default covering-<graph>.json)");
    cover->add_option("--dot", dot_dir, "also write member and union diagrams here");

    auto* verify = app.add_subcommand("verify", "Re-verify a covering certificate");
    verify->add_option("--cert", cert_path, "certificate JSON path")->required();

    auto* corpus = app.add_subcommand("corpus", "Run the staged acceptance criteria");
    corpus->add_option("--suite", suite, "quick, order8, or full")->required();
    corpus->add_option("--jobs", jobs, "worker threads for generation sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(embed)) return cmd_embed(graph_arg, surface, json);
        if (app.got_subcommand(obstructions))
            return cmd_obstructions(order, surface, out_path.empty() ? "." : out_path,
                                    checkpoint, jobs);
        if (app.got_subcommand(cover)) return cmd_cover(graph_arg, gtilde, out_path, dot_dir);
        if (app.got_subcommand(verify)) return cmd_verify(cert_path);
        if (app.got_subcommand(corpus)) return cmd_corpus(suite, jobs);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return 2;
}
