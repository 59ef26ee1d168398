#include "obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "canon.hpp"
#include "graph6.hpp"
#include "json.hpp"

namespace kcover {

namespace {

// Dedup key: the packed upper-triangle encoding fits one word through
// order 11, which covers every supported generation order.
uint64_t class_key(const CanonicalForm& f) {
    return f.words.empty() ? 0 : f.words[0];
}

// Lower bound on the edges any connected min-degree-3 completion of g
// must add: each new edge fixes at most two degree deficits and joins at
// most two components.
int completion_deficit(const Graph& g) {
    int def = 0;
    for (int v = 0; v < g.order(); ++v) def += std::max(0, 3 - g.degree(v));
    int ncomp = static_cast<int>(components(g).size());
    return std::max((def + 1) / 2, ncomp - 1);
}

ObstructionRecord probe(const Graph& g, const Surface& s, Engine& engine,
                        bool stop_early) {
    ObstructionRecord rec;
    rec.graph = g;
    rec.surface = s;
    rec.fails_surface = !engine.embeds(g, s);
    if (!rec.fails_surface) {
        for (auto [u, v] : g.edges()) rec.deletions.push_back({u, v, true});
        return rec;
    }
    rec.minimal = true;
    for (auto [u, v] : g.edges()) {
        bool em = engine.embeds(remove_isolated(delete_edge(g, u, v)), s);
        rec.deletions.push_back({u, v, em});
        if (!em) {
            rec.minimal = false;
            if (stop_early) break;
        }
    }
    return rec;
}

// One-edge extensions of every class at a level, deduped by canonical
// form. `keep` filters extensions before the (relatively costly)
// canonicalization.
std::vector<Graph> expand_level(const std::vector<Graph>& level,
                                const std::function<bool(const Graph&)>& keep) {
    std::unordered_set<uint64_t> seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
        for (int u = 0; u < g.order(); ++u) {
            for (int v = u + 1; v < g.order(); ++v) {
                if (g.has_edge(u, v)) continue;
                Graph h = g;
                h.add_edge(u, v);
                if (keep && !keep(h)) continue;
                CanonicalResult res = canonicalize(h);
                if (!seen.insert(class_key(res.form)).second) continue;
                Graph rep = relabel(h, res.labeling);
                rep.set_name("");
                next.push_back(std::move(rep));
            }
        }
    }
    return next;
}

std::vector<Graph> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(parse_graph6(line));
    return out;
}

void write_graph6_lines(const std::string& path, const std::vector<Graph>& gs) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const Graph& g : gs) out << write_graph6(g) << "\n";
}

std::string iso_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

ObstructionRecord is_obstruction(const Graph& g, const Surface& s, Engine& engine) {
    if (g.order() == 0 || g.min_degree() == 0)
        throw std::invalid_argument("obstruction probe needs a graph without isolated vertices");
    return probe(g, s, engine, false);
}

std::vector<ObstructionRecord> generate_obstructions(int order, const Surface& s,
                                                     Engine& engine,
                                                     const GenerateOptions& opts) {
    if (order < 1 || order > 11)
        throw std::invalid_argument("generation supports orders 1 through 11");
    const int cap = 3 * (order - 2 + s.euler_genus()) + 1;
    const int top = std::min(cap, order * (order - 1) / 2);

    std::vector<Graph> level{Graph(order)};
    std::vector<ObstructionRecord> found;
    // A resumed run may replay the level whose finds the found file
    // already holds, so inserts are keyed by canonical form.
    std::unordered_set<uint64_t> found_keys;
    uint64_t candidates = 0;
    int start = 0;

    std::string prefix;
    if (!opts.checkpoint_dir.empty()) {
        prefix = opts.checkpoint_dir + "/" + format_surface(s) + "-o" + std::to_string(order);
        for (int e = top; e > 0 && start == 0; --e) {
            std::ifstream probe_file(prefix + "-level" + std::to_string(e) + ".g6");
            if (!probe_file) continue;
            probe_file.close();
            level = read_graph6_lines(prefix + "-level" + std::to_string(e) + ".g6");
            for (const Graph& g : read_graph6_lines(prefix + "-found.g6"))
                if (found_keys.insert(class_key(canonical_form(g))).second)
                    found.push_back(probe(g, s, engine, false));
            start = e;
        }
    }

    std::vector<std::unique_ptr<Engine>> workers;
    for (int w = 1; w < opts.jobs; ++w) workers.push_back(std::make_unique<Engine>(false));

    for (int e = start; e <= top; ++e) {
        std::vector<const Graph*> cands;
        for (const Graph& g : level)
            if (g.min_degree() >= 3 && is_connected(g)) cands.push_back(&g);
        candidates += cands.size();
        std::vector<ObstructionRecord> recs(cands.size());
        if (workers.empty() || cands.size() < 2) {
            for (size_t i = 0; i < cands.size(); ++i) recs[i] = probe(*cands[i], s, engine, true);
        } else {
            std::atomic<size_t> next{0};
            auto work = [&](Engine& worker) {
                for (size_t i; (i = next.fetch_add(1)) < cands.size();)
                    recs[i] = probe(*cands[i], s, worker, true);
            };
            std::vector<std::thread> pool;
            for (auto& w : workers) pool.emplace_back(work, std::ref(*w));
            work(engine);
            for (auto& t : pool) t.join();
        }
        for (size_t i = 0; i < cands.size(); ++i) {
            if (recs[i].minimal && found_keys.insert(class_key(canonical_form(*cands[i]))).second)
                found.push_back(std::move(recs[i]));
        }
        if (opts.progress)
            opts.progress({e, level.size(), candidates, found.size()});
        if (e == top || level.empty()) break;
        level = expand_level(level, [&](const Graph& h) {
            return h.edge_count() + completion_deficit(h) <= top;
        });
        if (!prefix.empty()) {
            // The found file is written first so that a present level
            // file always implies a found file covering all lower levels.
            std::vector<Graph> fg;
            for (const auto& r : found) fg.push_back(r.graph);
            write_graph6_lines(prefix + "-found.g6", fg);
            write_graph6_lines(prefix + "-level" + std::to_string(e + 1) + ".g6", level);
        }
    }

    std::sort(found.begin(), found.end(), [](const ObstructionRecord& a, const ObstructionRecord& b) {
        int ea = a.graph.edge_count(), eb = b.graph.edge_count();
        if (ea != eb) return ea < eb;
        return write_graph6(a.graph) < write_graph6(b.graph);
    });
    for (size_t i = 0; i < found.size(); ++i)
        found[i].catalog_id = format_surface(s) + "-o" + std::to_string(order) + "-" +
                              std::to_string(i + 1);
    return found;
}

std::vector<std::vector<Graph>> all_graph_classes(int order, int max_edges) {
    if (order < 1 || order > 11)
        throw std::invalid_argument("class sweep supports orders 1 through 11");
    const int top = std::min(max_edges, order * (order - 1) / 2);
    std::vector<std::vector<Graph>> levels;
    levels.push_back({Graph(order)});
    for (int e = 0; e < top; ++e) {
        levels.push_back(expand_level(levels.back(), nullptr));
        if (levels.back().empty()) break;
    }
    return levels;
}

void write_catalog(const std::vector<ObstructionRecord>& records, int order,
                   const Surface& s, const std::string& graph6_path,
                   const std::string& meta_path) {
    std::ofstream g6(graph6_path, std::ios::trunc);
    if (!g6) throw std::runtime_error("cannot write " + graph6_path);
    for (const auto& r : records) g6 << write_graph6(r.graph) << "\n";
    g6.close();

    nlohmann::json meta;
    meta["surface"] = format_surface(s);
    meta["order"] = order;
    meta["generated_at"] = iso_timestamp();
    meta["records"] = nlohmann::json::array();
    for (const auto& r : records) {
        meta["records"].push_back({{"catalog_id", r.catalog_id},
                                   {"graph6", write_graph6(r.graph)},
                                   {"edges", r.graph.edge_count()}});
    }
    std::ofstream mf(meta_path, std::ios::trunc);
    if (!mf) throw std::runtime_error("cannot write " + meta_path);
    mf << meta.dump(2) << "\n";
}

}  // namespace kcover
