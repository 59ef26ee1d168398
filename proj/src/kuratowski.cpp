#include "kuratowski.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "canon.hpp"

namespace kcover {

std::string kind_name(KuratowskiKind k) {
    return k == KuratowskiKind::K5 ? "K5" : "K3,3";
}

std::optional<KuratowskiKind> kind_from_name(const std::string& name) {
    if (name == "K5") return KuratowskiKind::K5;
    if (name == "K3,3") return KuratowskiKind::K33;
    return std::nullopt;
}

std::vector<std::pair<int, int>> kuratowski_pairs(KuratowskiKind kind) {
    std::vector<std::pair<int, int>> pairs;
    if (kind == KuratowskiKind::K5) {
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
        }
    } else {
        for (int i = 0; i < 3; ++i) {
            for (int j = 3; j < 6; ++j) pairs.push_back({i, j});
        }
    }
    return pairs;
}

std::optional<KuratowskiKind> classify_subdivision(const Graph& g) {
    Graph h = remove_isolated(g);
    if (h.order() == 0 || !is_connected(h)) return std::nullopt;

    int deg2 = 0, deg3 = 0, deg4 = 0;
    for (int v = 0; v < h.order(); ++v) {
        switch (h.degree(v)) {
            case 2: ++deg2; break;
            case 3: ++deg3; break;
            case 4: ++deg4; break;
            default: return std::nullopt;
        }
    }

    if (deg4 == 5 && deg3 == 0) {
        Graph s = suppress_degree2(h);
        if (s.order() == 5 && is_isomorphic(s, make_complete(5))) {
            return KuratowskiKind::K5;
        }
    } else if (deg3 == 6 && deg4 == 0) {
        Graph s = suppress_degree2(h);
        if (s.order() == 6 && is_isomorphic(s, make_complete_bipartite(3, 3))) {
            return KuratowskiKind::K33;
        }
    }
    return std::nullopt;
}

namespace {

// Branch vertices are picked degree-eligible and ascending; for K3,3 the
// side holding the overall smallest branch vertex comes first, so every
// unordered bipartition appears once. Paths are grown pair by pair with a
// shared used-vertex mask; a subdivision subgraph determines its branch
// vertices (the degree >= 3 ones) and its path decomposition, so no edge
// set is ever produced twice.
class Enumerator {
public:
    Enumerator(const Graph& g, size_t limit) : g_(g), limit_(limit) {}

    KuratowskiPool run(bool stop_at_first) {
        stop_at_first_ = stop_at_first;
        run_kind(KuratowskiKind::K5);
        if (!(stop_at_first_ && !pool_.items.empty())) {
            run_kind(KuratowskiKind::K33);
        }
        std::sort(pool_.items.begin(), pool_.items.end(),
                  [](const KuratowskiSubgraph& a, const KuratowskiSubgraph& b) {
                      return a.edges < b.edges;
                  });
        for (size_t i = 1; i < pool_.items.size(); ++i) {
            if (pool_.items[i - 1].edges == pool_.items[i].edges) {
                throw std::logic_error("duplicate subdivision enumerated");
            }
        }
        return std::move(pool_);
    }

    bool run_stream(const std::function<bool(const KuratowskiSubgraph&)>& sink) {
        sink_ = &sink;
        run_kind(KuratowskiKind::K5);
        if (!stopped_) run_kind(KuratowskiKind::K33);
        return !stopped_;
    }

private:
    void run_kind(KuratowskiKind kind) {
        kind_ = kind;
        pairs_ = kuratowski_pairs(kind);
        int min_deg = kind == KuratowskiKind::K5 ? 4 : 3;
        candidates_.clear();
        for (int v = 0; v < g_.order(); ++v) {
            if (g_.degree(v) >= min_deg) candidates_.push_back(v);
        }
        int need = kind == KuratowskiKind::K5 ? 5 : 6;
        if (int(candidates_.size()) < need) return;
        branch_.assign(need, -1);
        choose_branch(0, 0);
    }

    void choose_branch(int idx, size_t from) {
        if (done()) return;
        int need = int(branch_.size());
        if (idx == need) {
            start_paths();
            return;
        }
        // K3,3: the second side may use any leftover candidates above the
        // global minimum a0, except that b0 > a0 keeps sides unordered.
        size_t lo = from;
        if (kind_ == KuratowskiKind::K33 && idx == 3) lo = 0;
        for (size_t c = lo; c < candidates_.size(); ++c) {
            int v = candidates_[c];
            if (kind_ == KuratowskiKind::K33 && idx >= 3) {
                if (idx == 3 && v < branch_[0]) continue;
                bool taken = false;
                for (int i = 0; i < 3; ++i) taken |= branch_[i] == v;
                if (taken) continue;
                if (idx > 3 && v <= branch_[idx - 1]) continue;
            }
            branch_[idx] = v;
            choose_branch(idx + 1, c + 1);
            branch_[idx] = -1;
            if (done()) return;
        }
    }

    void start_paths() {
        used_ = 0;
        for (int b : branch_) used_ |= VertexSet{1} << b;
        branch_mask_ = used_;
        paths_.assign(pairs_.size(), {});
        next_pair(0);
    }

    void next_pair(size_t pi) {
        if (done()) return;
        if (pi == pairs_.size()) {
            emit();
            return;
        }
        int s = branch_[pairs_[pi].first];
        int t = branch_[pairs_[pi].second];
        auto& path = paths_[pi];
        path.clear();
        path.push_back(s);
        walk(s, t, pi);
    }

    void walk(int cur, int t, size_t pi) {
        if (done()) return;
        for (int w : neighbor_list(g_, cur)) {
            if (w == t) {
                // Entering t from a path edge; endpoints of other paths stay
                // reusable, so t is never marked used.
                paths_[pi].push_back(t);
                next_pair(pi + 1);
                paths_[pi].pop_back();
                if (done()) return;
            } else if (!(used_ >> w & 1) && !(branch_mask_ >> w & 1)) {
                used_ |= VertexSet{1} << w;
                paths_[pi].push_back(w);
                walk(w, t, pi);
                paths_[pi].pop_back();
                used_ &= ~(VertexSet{1} << w);
                if (done()) return;
            }
        }
    }

    void emit() {
        if (!sink_) {
            if (pool_.items.size() >= limit_) {
                pool_.truncated = true;
                return;
            }
        }
        KuratowskiSubgraph sub;
        sub.kind = kind_;
        sub.branch_vertices = branch_;
        sub.paths = paths_;
        for (const auto& path : sub.paths) {
            for (size_t i = 1; i < path.size(); ++i) {
                int u = path[i - 1], v = path[i];
                sub.edges.push_back({std::min(u, v), std::max(u, v)});
            }
        }
        std::sort(sub.edges.begin(), sub.edges.end());
        if (sink_) {
            if (!(*sink_)(sub)) stopped_ = true;
        } else {
            pool_.items.push_back(std::move(sub));
        }
    }

    bool done() const {
        return stopped_ || pool_.truncated ||
               (stop_at_first_ && !pool_.items.empty());
    }

    const Graph& g_;
    size_t limit_;
    bool stop_at_first_ = false;
    bool stopped_ = false;
    const std::function<bool(const KuratowskiSubgraph&)>* sink_ = nullptr;
    KuratowskiPool pool_;

    KuratowskiKind kind_ = KuratowskiKind::K5;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> candidates_;
    std::vector<int> branch_;
    std::vector<std::vector<int>> paths_;
    VertexSet used_ = 0;
    VertexSet branch_mask_ = 0;
};

}  // namespace

KuratowskiPool enumerate_kuratowski(const Graph& g, size_t limit) {
    return Enumerator(g, limit).run(false);
}

bool for_each_kuratowski(const Graph& g,
                         const std::function<bool(const KuratowskiSubgraph&)>& sink) {
    return Enumerator(g, 0).run_stream(sink);
}

bool contains_kuratowski(const Graph& g) {
    return !Enumerator(g, 1).run(true).items.empty();
}

}  // namespace kcover
