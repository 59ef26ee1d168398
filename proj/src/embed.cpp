#include "embed.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "canon.hpp"
#include "graph6.hpp"

namespace kcover {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int component_lower_bound(int v, int e) {
    if (e < 2) return 0;
    int bound = 2 - v + e - std::max(1, (2 * e) / 3);
    return std::max(0, bound);
}

// Counts nodes into the engine-wide statistic and enforces a per-call limit.
struct NodeBudget {
    std::atomic<uint64_t>& stats;
    uint64_t limit = 0;  // 0 = unlimited
    uint64_t used = 0;

    void tick() {
        stats.fetch_add(1, std::memory_order_relaxed);
        if (limit && ++used > limit) throw SearchLimitReached{};
    }
};

// ---------------------------------------------------------------------------
// Backtracking search over one connected graph.
//
// Vertices are inserted one at a time (degree descending, always adjacent to
// the part already embedded). The first edge from a new vertex to the
// embedded part extends a face without changing Euler genus; every later
// edge either splits a face (+0), rejoins one with a twist (+1), or merges
// two faces (+2). Faces are retraced from scratch at each node; the
// doubled-flag walk handles signed rotation schemes uniformly.
// ---------------------------------------------------------------------------
class ConnectedSearch {
public:
    enum class Mode {
        Orientable,          // all-positive schemes, Euler genus <= budget
        Nonorientable,       // accepts orientable leaves at budget-1 too
        NonorientableStrict  // the witness itself must be nonorientable
    };

    ConnectedSearch(const Graph& g, Mode mode, int budget, NodeBudget& nodes)
        : g_(g), n_(g.order()), mode_(mode), budget_(budget), nodes_(nodes) {
        if (g.edge_count() > 63) {
            throw std::invalid_argument("graph too large for face bitsets");
        }
        build_plan();
    }

    void request_witness() { want_witness_ = true; }

    bool run() {
        if (plan_.empty()) {
            // A single vertex only has the trivial scheme: orientable, genus 0.
            if (mode_ == Mode::NonorientableStrict) return false;
            if (want_witness_) witness_ = default_scheme(g_);
            return true;
        }
        rotlen_.assign(n_, 0);
        neg_.assign(n_, 0);
        embedded_ = VertexSet{1} << order_[0];
        return descend(0, 0, true, false);
    }

    const EmbeddingScheme& witness() const { return witness_; }

private:
    static constexpr int kMaxFaces = 64;

    struct PlanEdge {
        int u;        // endpoint already embedded
        int v;        // endpoint being connected (new vertex when attach)
        bool attach;  // first edge of v: the rotation of v starts here
    };

    struct Child {
        int8_t slot_u;
        int8_t slot_v;
        int8_t sign;   // +1 or -1
        int8_t delta;  // Euler genus increase
    };

    // --- insertion plan ----------------------------------------------------

    void build_plan() {
        std::vector<bool> placed(n_, false);
        int first = 0;
        for (int v = 1; v < n_; ++v) {
            if (g_.degree(v) > g_.degree(first)) first = v;
        }
        order_.push_back(first);
        placed[first] = true;
        VertexSet placed_mask = VertexSet{1} << first;
        for (int step = 1; step < n_; ++step) {
            int best = -1;
            for (int v = 0; v < n_; ++v) {
                if (placed[v] || (g_.neighbors(v) & placed_mask) == 0) continue;
                if (best < 0 || g_.degree(v) > g_.degree(best)) best = v;
            }
            if (best < 0) throw std::invalid_argument("graph must be connected");
            order_.push_back(best);
            placed[best] = true;
            placed_mask |= VertexSet{1} << best;
        }

        std::vector<int> pos(n_, -1);
        for (int i = 0; i < n_; ++i) pos[order_[i]] = i;

        for (int i = 1; i < n_; ++i) {
            int v = order_[i];
            std::vector<int> back;
            for (int u : neighbor_list(g_, v)) {
                if (pos[u] < i) back.push_back(u);
            }
            for (size_t j = 0; j < back.size(); ++j) {
                plan_.push_back({back[j], v, j == 0});
            }
        }

        // Static data for the tight-budget prune: at each plan position the
        // closing edges still pending for the current vertex, and for the
        // current (while unattached) and every future vertex the set of its
        // already-embedded neighbours.
        rem_closes_.assign(plan_.size(), {});
        future_masks_.assign(plan_.size(), {});
        for (size_t p = 0; p < plan_.size(); ++p) {
            int cur = plan_[p].v;
            for (size_t q = p; q < plan_.size() && plan_[q].v == cur; ++q) {
                if (!plan_[q].attach) {
                    rem_closes_[p].push_back({plan_[q].u, plan_[q].v});
                }
            }
            int cur_pos = pos[cur];
            VertexSet before = 0;
            for (int i = 0; i <= cur_pos; ++i) before |= VertexSet{1} << order_[i];
            int from = plan_[p].attach ? cur_pos : cur_pos + 1;
            for (int j = from; j < n_; ++j) {
                VertexSet mask = g_.neighbors(order_[j]) & before & ~(VertexSet{1} << order_[j]);
                if (mask) future_masks_[p].push_back(mask);
            }
        }

        children_.assign(plan_.size(), {});
        for (auto& c : children_) c.reserve(64);
    }

    // --- rotation state ----------------------------------------------------

    int flag_id(int a, int b, int s) const { return ((a * n_ + b) << 1) | s; }

    void insert_dart(int v, int after, int w) {
        // after == -1: w becomes the sole dart.
        int len = rotlen_[v];
        int at = (len == 0) ? 0 : after + 1;
        for (int i = len; i > at; --i) rot_[v][i] = rot_[v][i - 1];
        rot_[v][at] = w;
        rotlen_[v] = len + 1;
        for (int i = 0; i < rotlen_[v]; ++i) rotpos_[v][rot_[v][i]] = i;
    }

    void remove_dart(int v, int w) {
        int len = rotlen_[v];
        for (int i = rotpos_[v][w]; i < len - 1; ++i) rot_[v][i] = rot_[v][i + 1];
        rotlen_[v] = len - 1;
        for (int i = 0; i < rotlen_[v]; ++i) rotpos_[v][rot_[v][i]] = i;
    }

    // --- face tracing --------------------------------------------------------

    // Flags are (dart a->b, side s in {0:+, 1:-}). Crossing vertex b flips the
    // side by the edge signature and moves to the next (side +) or previous
    // (side -) dart in the rotation at b. Orbits come in mirror pairs; one
    // pair is one face. Each corner of a face is crossed on side + by exactly
    // one orbit of its pair; which one decides how a new edge through two
    // corners of the same face changes the surface.
    void trace_faces() {
        ++stamp_;
        face_count_ = 0;
        for (int idx = 0; idx < n_; ++idx) {
            int v = order_[idx];
            if (!(embedded_ >> v & 1)) break;
            // A dartless embedded vertex floats freely: any face can take it.
            bset_[v] = rotlen_[v] ? 0 : ~uint64_t{0};
        }
        for (int idx = 0; idx < n_; ++idx) {
            int v = order_[idx];
            if (!(embedded_ >> v & 1)) break;
            for (int i = 0; i < rotlen_[v]; ++i) {
                int u = rot_[v][i];
                for (int s = 0; s < 2; ++s) {
                    if (visit_stamp_[flag_id(v, u, s)] == stamp_) continue;
                    int f = face_count_++;
                    assert(f < kMaxFaces);
                    trace_orbit(v, u, s, f, 0);
                    trace_orbit(u, v, 1 ^ s ^ (neg_[v] >> u & 1), f, 1);
                }
            }
        }
    }

    void trace_orbit(int a0, int b0, int s0, int face, int par) {
        int a = a0, b = b0, s = s0;
        do {
            visit_stamp_[flag_id(a, b, s)] = stamp_;
            int sp = s ^ (neg_[a] >> b & 1);
            int len = rotlen_[b];
            int i = rotpos_[b][a];
            int corner, j;
            if (sp == 0) {
                corner = i;
                j = (i + 1 == len) ? 0 : i + 1;
                corner_face_[b][corner] = static_cast<int8_t>(face);
                corner_par_[b][corner] = static_cast<int8_t>(par);
            } else {
                corner = (i == 0) ? len - 1 : i - 1;
                j = corner;
            }
            bset_[b] |= uint64_t{1} << face;
            a = b;
            b = rot_[a][j];
            s = sp;
        } while (a != a0 || b != b0 || s != s0);
    }

    // --- search ---------------------------------------------------------------

    int cap(bool orientable_now) const {
        if (mode_ == Mode::Orientable) return budget_;
        // An orientable state must either stay within budget-1 (an orientable
        // scheme uses one handle end worth less) or spend +1 on a twist later.
        return orientable_now ? budget_ - 1 : budget_;
    }

    bool descend(size_t p, int eg, bool orientable_now, bool broken) {
        nodes_.tick();
        if (p == plan_.size()) {
            if (mode_ == Mode::NonorientableStrict && orientable_now) return false;
            if (want_witness_) capture_witness();
            return true;
        }

        const PlanEdge& pe = plan_[p];
        trace_faces();

        // Tight budget: merges are no longer affordable, and splits, twists
        // and attachments only ever refine face sharing. Every pending closing
        // edge of the current vertex needs a common face right now, and every
        // not yet fully wired vertex needs one face holding all its embedded
        // neighbours. The test must use the full budget, not the tighter
        // orientable-state cap: from an orientable state with eg = budget-2 a
        // sign-flipping merge still fits, because turning nonorientable lifts
        // the cap by one exactly when the merge spends two.
        if (budget_ - eg <= 1) {
            for (auto [u, w] : rem_closes_[p]) {
                if ((embedded_ >> w & 1) && (bset_[u] & bset_[w]) == 0) return false;
            }
            for (VertexSet mask : future_masks_[p]) {
                uint64_t acc = ~uint64_t{0};
                for (VertexSet m = mask & embedded_; m; m &= m - 1) {
                    acc &= bset_[std::countr_zero(m)];
                }
                if (acc == 0) return false;
            }
        }

        auto& kids = children_[p];
        kids.clear();
        if (pe.attach) {
            enumerate_attach(pe, kids, broken);
        } else {
            enumerate_close(pe, eg, kids, broken);
        }

        for (const Child& c : kids) {
            int eg2 = eg + c.delta;
            bool orient2 =
                orientable_now && c.delta != 1 && !(c.delta == 2 && c.sign < 0);
            if (eg2 > cap(orient2)) continue;
            bool broken2 = broken || child_breaks(pe, c);
            apply(pe, c);
            bool ok = descend(p + 1, eg2, orient2, broken2);
            undo(pe, c);
            if (ok) return true;
        }
        return false;
    }

    void enumerate_attach(const PlanEdge& pe, std::vector<Child>& out,
                          bool broken) const {
        int len = rotlen_[pe.u];
        if (len == 0) {
            out.push_back({-1, -1, 1, 0});
            return;
        }
        for (int i = 0; i < len; ++i) {
            if (!broken && !mirror_keep(pe, i, -1)) continue;
            out.push_back({static_cast<int8_t>(i), -1, 1, 0});
        }
    }

    void enumerate_close(const PlanEdge& pe, int eg, std::vector<Child>& out,
                         bool broken) {
        bool twists = mode_ != Mode::Orientable && eg + 1 <= budget_;
        auto& merges = merge_scratch_;
        merges.clear();
        for (int i = 0; i < rotlen_[pe.u]; ++i) {
            int fu = corner_face_[pe.u][i];
            int pu = corner_par_[pe.u][i];
            for (int j = 0; j < rotlen_[pe.v]; ++j) {
                if (!broken && !mirror_keep(pe, i, j)) continue;
                auto si = static_cast<int8_t>(i);
                auto sj = static_cast<int8_t>(j);
                if (fu == corner_face_[pe.v][j]) {
                    int split = (pu == corner_par_[pe.v][j]) ? 1 : -1;
                    if (split > 0 || mode_ != Mode::Orientable) {
                        out.push_back({si, sj, static_cast<int8_t>(split), 0});
                    }
                    if (twists) {
                        out.push_back({si, sj, static_cast<int8_t>(-split), 1});
                    }
                } else {
                    merges.push_back({si, sj, 1, 2});
                    if (mode_ != Mode::Orientable) merges.push_back({si, sj, -1, 2});
                }
            }
        }
        // Cheap children first: splits, then twists, then merges.
        std::stable_sort(out.begin(), out.end(),
                         [](const Child& a, const Child& b) { return a.delta < b.delta; });
        out.insert(out.end(), merges.begin(), merges.end());
    }

    // While every rotation has at most two darts the partial embedding equals
    // its own mirror image, so children that are mirror images of each other
    // explore isomorphic subtrees. Keep the lexicographically smaller slot
    // pair; a strict winner is no longer mirror-symmetric.
    int mirror_slot(int v, int slot) const {
        return rotlen_[v] == 2 ? 1 - slot : slot;
    }

    bool mirror_keep(const PlanEdge& pe, int i, int j) const {
        assert(rotlen_[pe.u] <= 2 && (pe.attach || rotlen_[pe.v] <= 2));
        int mi = mirror_slot(pe.u, i);
        int mj = pe.attach ? j : mirror_slot(pe.v, j);
        return std::make_pair(i, j) <= std::make_pair(mi, mj);
    }

    bool child_breaks(const PlanEdge& pe, const Child& c) const {
        if (c.slot_u < 0) return false;
        int mi = mirror_slot(pe.u, c.slot_u);
        int mj = pe.attach ? c.slot_v : mirror_slot(pe.v, c.slot_v);
        return mi != c.slot_u || mj != c.slot_v;
    }

    void apply(const PlanEdge& pe, const Child& c) {
        insert_dart(pe.u, c.slot_u, pe.v);
        insert_dart(pe.v, c.slot_v, pe.u);
        if (pe.attach) embedded_ |= VertexSet{1} << pe.v;
        if (c.sign < 0) {
            neg_[pe.u] |= VertexSet{1} << pe.v;
            neg_[pe.v] |= VertexSet{1} << pe.u;
        }
    }

    void undo(const PlanEdge& pe, const Child& c) {
        remove_dart(pe.u, pe.v);
        remove_dart(pe.v, pe.u);
        if (pe.attach) embedded_ &= ~(VertexSet{1} << pe.v);
        if (c.sign < 0) {
            neg_[pe.u] &= ~(VertexSet{1} << pe.v);
            neg_[pe.v] &= ~(VertexSet{1} << pe.u);
        }
    }

    void capture_witness() {
        witness_.rotation.assign(n_, {});
        witness_.signature.assign(n_, std::vector<int>(n_, 1));
        for (int v = 0; v < n_; ++v) {
            witness_.rotation[v].assign(rot_[v].begin(),
                                        rot_[v].begin() + rotlen_[v]);
            for (int u = 0; u < n_; ++u) {
                if (neg_[v] >> u & 1) witness_.signature[v][u] = -1;
            }
        }
    }

    const Graph& g_;
    int n_;
    Mode mode_;
    int budget_;
    NodeBudget& nodes_;
    bool want_witness_ = false;
    EmbeddingScheme witness_;

    std::vector<int> order_;
    std::vector<PlanEdge> plan_;
    std::vector<std::vector<std::pair<int, int>>> rem_closes_;
    std::vector<std::vector<VertexSet>> future_masks_;
    std::vector<std::vector<Child>> children_;
    std::vector<Child> merge_scratch_;

    std::array<std::array<int, kMaxOrder>, kMaxOrder> rot_{};
    std::array<std::array<int, kMaxOrder>, kMaxOrder> rotpos_{};
    std::vector<int> rotlen_;
    std::vector<VertexSet> neg_;
    VertexSet embedded_ = 0;

    std::vector<int> visit_stamp_ = std::vector<int>(2 * kMaxOrder * kMaxOrder, 0);
    int stamp_ = 0;
    int face_count_ = 0;
    std::array<uint64_t, kMaxOrder> bset_{};
    std::array<std::array<int8_t, kMaxOrder>, kMaxOrder> corner_face_{};
    std::array<std::array<int8_t, kMaxOrder>, kMaxOrder> corner_par_{};
};

bool search_connected(const Graph& comp, ConnectedSearch::Mode mode, int budget,
                      NodeBudget& nodes, EmbeddingScheme* witness = nullptr) {
    ConnectedSearch s(comp, mode, budget, nodes);
    if (witness) s.request_witness();
    bool ok = s.run();
    if (ok && witness) *witness = s.witness();
    return ok;
}

// Minimal Euler genus over all-positive schemes of a connected graph.
int min_orientable_eg(const Graph& comp, NodeBudget& nodes) {
    int lb = euler_genus_lower_bound(comp);
    int limit = std::max(2, comp.edge_count() - comp.order() + 2);
    for (int eg = lb + (lb & 1); eg <= limit; eg += 2) {
        if (search_connected(comp, ConnectedSearch::Mode::Orientable, eg, nodes)) {
            return eg;
        }
    }
    throw std::logic_error("orientable embedding search did not terminate");
}

// Minimal Euler genus over nonorientable schemes of a connected graph;
// kInf for trees, which admit none.
int min_nonorientable_eg(const Graph& comp, int orientable_eg, NodeBudget& nodes) {
    if (comp.edge_count() == comp.order() - 1) return kInf;
    int lb = std::max(1, euler_genus_lower_bound(comp));
    // Re-routing one edge of a minimal orientable embedding with a twist
    // gives a nonorientable scheme one above it, so this always returns.
    for (int eg = lb; eg <= orientable_eg + 1; ++eg) {
        if (search_connected(comp, ConnectedSearch::Mode::NonorientableStrict, eg,
                             nodes)) {
            return eg;
        }
    }
    throw std::logic_error("nonorientable embedding search did not terminate");
}

// ---------------------------------------------------------------------------
// Disconnected graphs: each component contributes its minimal orientable
// Euler genus A and minimal nonorientable Euler genus B (infinite for trees).
// Euler genus is additive over disjoint unions within a surface kind; a
// nonorientable target needs either an all-orientable packing one below the
// budget or a packing using at least one nonorientable part within it.
// ---------------------------------------------------------------------------
struct ComponentProfile {
    int orientable_eg;     // A: even, always finite
    int nonorientable_eg;  // B: kInf when no nonorientable scheme exists
};

bool pack_fits(const std::vector<ComponentProfile>& parts, const Surface& s) {
    long sum_a = 0;
    for (const auto& pr : parts) sum_a += pr.orientable_eg;
    if (s.orientable) return sum_a <= s.euler_genus();

    long k = s.euler_genus();
    if (sum_a <= k - 1) return true;
    long best = 0;
    bool any_twist = false;
    long cheapest_switch = kInf;
    for (const auto& pr : parts) {
        if (pr.nonorientable_eg <= pr.orientable_eg) {
            best += pr.nonorientable_eg;
            any_twist = true;
        } else {
            best += pr.orientable_eg;
            cheapest_switch =
                std::min<long>(cheapest_switch,
                               long{pr.nonorientable_eg} - pr.orientable_eg);
        }
    }
    if (!any_twist) best += cheapest_switch;
    return best <= k;
}

}  // namespace

int euler_genus_lower_bound(const Graph& g) {
    int total = 0;
    for (VertexSet comp : components(g)) {
        int v = popcount(comp);
        int e = 0;
        for (auto [a, b] : g.edges()) {
            if (comp >> a & 1) ++e;
        }
        total += component_lower_bound(v, e);
    }
    return total;
}

struct Engine::Impl {
    mutable std::shared_mutex mu;
    std::unordered_map<std::string, bool> memo;  // "<canonical graph6> <surface>"
    std::atomic<uint64_t> nodes{0};
    std::atomic<uint64_t> hits{0};
    std::string cache_file;
    mutable bool dirty = false;

    std::optional<bool> lookup(const std::string& key) {
        std::shared_lock lk(mu);
        auto it = memo.find(key);
        if (it == memo.end()) return std::nullopt;
        hits.fetch_add(1, std::memory_order_relaxed);
        return it->second;
    }

    void store(const std::string& key, bool value) {
        std::unique_lock lk(mu);
        memo.emplace(key, value);
        dirty = true;
    }

    void load_file() {
        std::ifstream in(cache_file);
        if (!in) return;
        std::string g6, surf;
        int val;
        while (in >> g6 >> surf >> val) {
            memo.emplace(g6 + " " + surf, val != 0);
        }
        dirty = false;
    }

    void save_file() const {
        if (cache_file.empty()) return;
        std::shared_lock lk(mu);
        if (!dirty) return;
        std::ofstream out(cache_file, std::ios::trunc);
        if (!out) return;
        for (const auto& [key, val] : memo) {
            out << key << ' ' << (val ? 1 : 0) << '\n';
        }
        dirty = false;
    }
};

Engine::Engine(bool use_cache_dir) : impl_(std::make_unique<Impl>()) {
    if (!use_cache_dir) return;
    const char* dir = std::getenv("KCOVER_CACHE_DIR");
    if (!dir || !*dir) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    impl_->cache_file = std::string(dir) + "/embeds.cache";
    impl_->load_file();
}

Engine::~Engine() {
    impl_->save_file();
}

void Engine::save_cache() const { impl_->save_file(); }
uint64_t Engine::nodes_explored() const { return impl_->nodes.load(); }
uint64_t Engine::cache_hits() const { return impl_->hits.load(); }

size_t Engine::cache_size() const {
    std::shared_lock lk(impl_->mu);
    return impl_->memo.size();
}

std::optional<bool> Engine::embeds(const Graph& g, const Surface& s,
                                   const SearchConfig& cfg) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    if (euler_genus_lower_bound(g) > s.euler_genus()) return false;
    if (g.edge_count() == 0) return true;

    std::string key = write_graph6(canonical_graph(g)) + " " + format_surface(s);
    if (auto hit = impl_->lookup(key)) return *hit;

    NodeBudget budget{impl_->nodes, cfg.max_nodes};
    bool result;
    try {
        if (is_connected(g)) {
            auto mode = s.orientable ? ConnectedSearch::Mode::Orientable
                                     : ConnectedSearch::Mode::Nonorientable;
            result = search_connected(g, mode, s.euler_genus(), budget);
        } else {
            std::vector<ComponentProfile> parts;
            for (VertexSet comp : components(g)) {
                Graph sub = induced_subgraph(g, comp);
                if (sub.edge_count() == 0) continue;
                int a = min_orientable_eg(sub, budget);
                int b = s.orientable ? kInf : min_nonorientable_eg(sub, a, budget);
                parts.push_back({a, b});
            }
            result = pack_fits(parts, s);
        }
    } catch (const SearchLimitReached&) {
        return std::nullopt;
    }
    impl_->store(key, result);
    return result;
}

bool Engine::embeds(const Graph& g, const Surface& s) {
    return *embeds(g, s, SearchConfig{});
}

std::optional<EmbeddingScheme> Engine::find_embedding(const Graph& g,
                                                      const Surface& s) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    if (!embeds(g, s)) return std::nullopt;

    EmbeddingScheme total = default_scheme(g);
    NodeBudget budget{impl_->nodes, 0};

    struct Part {
        Graph sub;
        std::vector<int> labels;
    };
    std::vector<Part> parts;
    for (VertexSet comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (sub.edge_count() == 0) continue;
        parts.push_back({std::move(sub), set_members(comp)});
    }

    auto splice = [&](const Part& part, const EmbeddingScheme& piece) {
        const auto& labels = part.labels;
        for (size_t lv = 0; lv < labels.size(); ++lv) {
            int v = labels[lv];
            total.rotation[v].clear();
            for (int lu : piece.rotation[lv]) {
                total.rotation[v].push_back(labels[lu]);
            }
            for (size_t lu = 0; lu < labels.size(); ++lu) {
                total.signature[v][labels[lu]] = piece.signature[lv][lu];
            }
        }
    };

    if (parts.size() == 1) {
        auto mode = s.orientable ? ConnectedSearch::Mode::Orientable
                                 : ConnectedSearch::Mode::Nonorientable;
        EmbeddingScheme piece;
        if (!search_connected(parts[0].sub, mode, s.euler_genus(), budget, &piece)) {
            throw std::logic_error("witness extraction failed");
        }
        splice(parts[0], piece);
    } else if (!parts.empty()) {
        // Give every part its cheapest role, forcing one nonorientable part
        // when the all-orientable packing does not fit the target.
        std::vector<int> a(parts.size()), b(parts.size(), kInf);
        long sum_a = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            a[i] = min_orientable_eg(parts[i].sub, budget);
            sum_a += a[i];
            if (!s.orientable) {
                b[i] = min_nonorientable_eg(parts[i].sub, a[i], budget);
            }
        }
        std::vector<bool> twisted(parts.size(), false);
        if (!s.orientable && sum_a > s.euler_genus() - 1) {
            bool any = false;
            for (size_t i = 0; i < parts.size(); ++i) {
                if (b[i] <= a[i]) {
                    twisted[i] = true;
                    any = true;
                }
            }
            if (!any) {
                size_t best = 0;
                long cheapest = kInf;
                for (size_t i = 0; i < parts.size(); ++i) {
                    if (b[i] < kInf && b[i] - a[i] < cheapest) {
                        cheapest = b[i] - a[i];
                        best = i;
                    }
                }
                twisted[best] = true;
            }
        }
        for (size_t i = 0; i < parts.size(); ++i) {
            EmbeddingScheme piece;
            bool ok = twisted[i]
                          ? search_connected(parts[i].sub,
                                             ConnectedSearch::Mode::NonorientableStrict,
                                             b[i], budget, &piece)
                          : search_connected(parts[i].sub,
                                             ConnectedSearch::Mode::Orientable,
                                             a[i], budget, &piece);
            if (!ok) throw std::logic_error("witness extraction failed");
            splice(parts[i], piece);
        }
    }

    if (!scheme_fits(g, total, s)) {
        throw std::logic_error("witness does not fit the requested surface");
    }
    return total;
}

int Engine::orientable_genus(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    NodeBudget budget{impl_->nodes, 0};
    int total = 0;
    for (VertexSet comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (sub.edge_count() == 0) continue;
        total += min_orientable_eg(sub, budget);
    }
    return total / 2;
}

NonorientableGenus Engine::nonorientable_genus(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    if (embeds(g, Surface{true, 0})) return {0, true};
    int limit = g.edge_count() + 2;
    for (int k = std::max(1, euler_genus_lower_bound(g)); k <= limit; ++k) {
        if (embeds(g, Surface{false, k})) return {k, false};
    }
    throw std::logic_error("nonorientable genus search did not terminate");
}

// ---------------------------------------------------------------------------
// Oracle: every rotation system (first neighbour of each vertex pinned, the
// rest permuted) crossed with one signature per switching class (spanning
// tree positive, cotree edges free). Decisions use the same component
// packing as the engine; everything else is independent code.
// ---------------------------------------------------------------------------
OracleProfile oracle_profile(const Graph& g, uint64_t cap) {
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    int n = g.order();
    OracleProfile prof{kInf, kInf};

    std::vector<std::pair<int, int>> cotree;
    {
        VertexSet seen = 1;
        std::vector<int> queue{0};
        std::vector<VertexSet> tree(n, 0);
        for (size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (int u : neighbor_list(g, v)) {
                if (!(seen >> u & 1)) {
                    seen |= VertexSet{1} << u;
                    tree[v] |= VertexSet{1} << u;
                    tree[u] |= VertexSet{1} << v;
                    queue.push_back(u);
                }
            }
        }
        for (auto [a, b] : g.edges()) {
            if (!(tree[a] >> b & 1)) cotree.push_back({a, b});
        }
    }

    uint64_t schemes = 1;
    for (int v = 0; v < n; ++v) {
        for (int i = 2; i < g.degree(v); ++i) {
            schemes *= i;
            if (schemes > cap) throw std::invalid_argument("oracle cap exceeded");
        }
    }
    if (cotree.size() >= 63 || schemes > (cap >> cotree.size())) {
        throw std::invalid_argument("oracle cap exceeded");
    }

    EmbeddingScheme scheme = default_scheme(g);
    std::vector<std::vector<int>> tails(n);
    for (int v = 0; v < n; ++v) {
        auto nb = neighbor_list(g, v);
        scheme.rotation[v] = nb;
        if (nb.size() > 2) tails[v].assign(nb.begin() + 1, nb.end());
    }

    // Both minima are bounded below by the face count limit F <= 2E/3
    // (simple graph, E >= 3): eg >= 2 - V + E/3, even for orientable
    // schemes, at least 1 for nonorientable ones. Once both minima sit on
    // their floors no further scheme can improve them.
    int e = g.edge_count();
    int bound = e >= 3 ? 2 - n + (e + 2) / 3 : 0;
    int floor_or = std::max(0, bound + (bound & 1));
    int floor_nonor = std::max(1, bound);
    bool done = false;

    uint64_t sig_count = uint64_t{1} << cotree.size();
    std::function<void(int)> visit = [&](int v) {
        if (done) return;
        if (v == n) {
            for (uint64_t bits = 0; bits < sig_count; ++bits) {
                for (size_t c = 0; c < cotree.size(); ++c) {
                    auto [a, b] = cotree[c];
                    int val = (bits >> c & 1) ? -1 : 1;
                    scheme.signature[a][b] = val;
                    scheme.signature[b][a] = val;
                }
                int eg = scheme_euler_genus(g, scheme);
                if (scheme_orientable(g, scheme)) {
                    prof.orientable_eg = std::min(prof.orientable_eg, eg);
                } else {
                    prof.nonorientable_eg = std::min(prof.nonorientable_eg, eg);
                }
                if (prof.orientable_eg <= floor_or && prof.nonorientable_eg <= floor_nonor) {
                    done = true;
                    break;
                }
            }
            for (auto [a, b] : cotree) {
                scheme.signature[a][b] = 1;
                scheme.signature[b][a] = 1;
            }
            return;
        }
        if (tails[v].empty()) {
            visit(v + 1);
            return;
        }
        auto& tail = tails[v];
        std::sort(tail.begin(), tail.end());
        do {
            std::copy(tail.begin(), tail.end(), scheme.rotation[v].begin() + 1);
            visit(v + 1);
        } while (!done && std::next_permutation(tail.begin(), tail.end()));
    };
    visit(0);
    return prof;
}

bool oracle_embeds(const Graph& g, const Surface& s, uint64_t cap) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    std::vector<ComponentProfile> parts;
    for (VertexSet comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (sub.edge_count() == 0) continue;
        OracleProfile prof = oracle_profile(sub, cap);
        parts.push_back({prof.orientable_eg, prof.nonorientable_eg});
    }
    return pack_fits(parts, s);
}

}  // namespace kcover
