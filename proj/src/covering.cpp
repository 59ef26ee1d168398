#include "covering.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace kcover {

std::vector<Surface> CoveringConditions::triple_surfaces() const {
    std::vector<Surface> out;
    if (gtilde >= 2) out.push_back(Surface{false, 2});
    if (gtilde >= 3) out.push_back(Surface{true, 1});
    return out;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// A member is taken at face value only after this passes: every path edge
// lies in the host, paths join exactly the branch pairs they claim (lower
// pair index first), no edge is used twice, the recorded edge list matches
// the paths, and the union really is a subdivision of the claimed kind.
bool member_valid(const Graph& g, const KuratowskiSubgraph& m) {
    size_t nb = m.kind == KuratowskiKind::K5 ? 5 : 6;
    auto pairs = kuratowski_pairs(m.kind);
    if (m.branch_vertices.size() != nb || m.paths.size() != pairs.size()) {
        return false;
    }
    for (int v : m.branch_vertices) {
        if (v < 0 || v >= g.order()) return false;
    }
    auto sorted_branch = m.branch_vertices;
    std::sort(sorted_branch.begin(), sorted_branch.end());
    if (std::adjacent_find(sorted_branch.begin(), sorted_branch.end()) !=
        sorted_branch.end()) {
        return false;
    }
    EdgeList rebuilt;
    for (size_t p = 0; p < pairs.size(); ++p) {
        const auto& path = m.paths[p];
        if (path.size() < 2) return false;
        if (path.front() != m.branch_vertices[pairs[p].first] ||
            path.back() != m.branch_vertices[pairs[p].second]) {
            return false;
        }
        for (size_t i = 1; i < path.size(); ++i) {
            int u = path[i - 1], v = path[i];
            if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) return false;
            if (u == v || !g.has_edge(u, v)) return false;
            rebuilt.push_back({std::min(u, v), std::max(u, v)});
        }
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    if (std::adjacent_find(rebuilt.begin(), rebuilt.end()) != rebuilt.end()) {
        return false;
    }
    if (rebuilt != m.edges) return false;
    Graph sub(g.order());
    for (auto [u, v] : rebuilt) sub.add_edge(u, v);
    return classify_subdivision(sub) == m.kind;
}

Graph union_graph(int order, const std::vector<const KuratowskiSubgraph*>& ms) {
    Graph u(order);
    for (const KuratowskiSubgraph* m : ms) {
        for (auto [a, b] : m->edges) u.add_edge(a, b);
    }
    return u;
}

}  // namespace

CoveringReport check_covering(const Graph& g,
                              const std::vector<KuratowskiSubgraph>& members,
                              int gtilde, Engine& eng) {
    CoveringConditions cond{gtilde};
    CoveringReport rep;
    rep.arity_ok = int(members.size()) == cond.arity();

    std::vector<char> ok(members.size(), 0);
    rep.members_ok = true;
    for (size_t i = 0; i < members.size(); ++i) {
        ok[i] = member_valid(g, members[i]);
        if (!ok[i]) rep.members_ok = false;
    }

    EdgeList hedges = g.edges();
    rep.coverage.assign(hedges.size(), -1);
    for (size_t e = 0; e < hedges.size(); ++e) {
        for (size_t i = 0; i < members.size(); ++i) {
            if (!ok[i]) continue;
            if (std::binary_search(members[i].edges.begin(),
                                   members[i].edges.end(), hedges[e])) {
                rep.coverage[e] = int(i);
                break;
            }
        }
    }
    rep.coverage_ok =
        std::find(rep.coverage.begin(), rep.coverage.end(), -1) ==
        rep.coverage.end();

    bool skipped = false;
    rep.pairs_ok = true;
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            if (!ok[i] || !ok[j]) {
                skipped = true;
                continue;
            }
            Graph u = union_graph(g.order(), {&members[i], &members[j]});
            bool emb = eng.embeds(suppress_degree2(u), cond.pair_surface());
            rep.pair_results.push_back(
                {{int(i), int(j)}, cond.pair_surface(), emb});
            if (emb) rep.pairs_ok = false;
        }
    }
    if (skipped) rep.pairs_ok = false;

    skipped = false;
    rep.triples_ok = true;
    auto tsurfs = cond.triple_surfaces();
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            for (size_t k = j + 1; k < members.size(); ++k) {
                if (!ok[i] || !ok[j] || !ok[k]) {
                    skipped = true;
                    continue;
                }
                Graph u = union_graph(g.order(),
                                      {&members[i], &members[j], &members[k]});
                Graph s = suppress_degree2(u);
                for (const Surface& surf : tsurfs) {
                    bool emb = eng.embeds(s, surf);
                    rep.triple_results.push_back(
                        {{int(i), int(j), int(k)}, surf, emb});
                    if (emb) rep.triples_ok = false;
                }
            }
        }
    }
    if (skipped && !tsurfs.empty()) rep.triples_ok = false;

    return rep;
}

namespace {

// Set-cover DFS over the mask pool. Each member set is visited at most
// once: after a candidate's subtree is exhausted it is banned for the
// node's remaining siblings, and slot-filling picks (once coverage is
// complete) only move to higher pool indices.
class CoverSearch {
public:
    CoverSearch(const Graph& g, const CoveringConditions& cond, Engine& eng,
                const EdgeList& hedges, const std::vector<uint64_t>& masks)
        : g_(g),
          cond_(cond),
          eng_(eng),
          hedges_(hedges),
          masks_(masks),
          tsurfs_(cond.triple_surfaces()) {
        full_ = hedges.size() == 64 ? ~uint64_t{0}
                                    : (uint64_t{1} << hedges.size()) - 1;
        covers_.resize(hedges.size());
        for (uint32_t i = 0; i < masks_.size(); ++i) {
            max_bits_ = std::max(max_bits_, std::popcount(masks_[i]));
            for (uint64_t m = masks_[i]; m;) {
                int b = std::countr_zero(m);
                m &= m - 1;
                covers_[b].push_back(i);
            }
        }
        banned_.assign(masks_.size(), 0);
        in_set_.assign(masks_.size(), 0);
    }

    std::optional<std::vector<int>> run() {
        dfs(0);
        return hit_;
    }

    uint64_t pair_checks = 0;
    uint64_t triple_checks = 0;

private:
    // True when the union of pool members a and b fails the pair surface.
    bool pair_fails(uint32_t a, uint32_t b) {
        if (a > b) std::swap(a, b);
        uint64_t key = (uint64_t{a} << 32) | b;
        auto it = pair_memo_.find(key);
        if (it != pair_memo_.end()) return it->second;
        ++pair_checks;
        Graph u = mask_graph(masks_[a] | masks_[b]);
        bool fails = !eng_.embeds(suppress_degree2(u), cond_.pair_surface());
        pair_memo_.emplace(key, fails);
        return fails;
    }

    // True when the union of a, b, c fails every triple surface.
    bool triple_fails(uint32_t a, uint32_t b, uint32_t c) {
        uint32_t x[3] = {a, b, c};
        std::sort(x, x + 3);
        uint64_t key = (uint64_t{x[0]} << 42) | (uint64_t{x[1]} << 21) | x[2];
        auto it = triple_memo_.find(key);
        if (it != triple_memo_.end()) return it->second;
        ++triple_checks;
        Graph u = mask_graph(masks_[a] | masks_[b] | masks_[c]);
        Graph s = suppress_degree2(u);
        bool fails = true;
        for (const Surface& surf : tsurfs_) {
            if (eng_.embeds(s, surf)) {
                fails = false;
                break;
            }
        }
        triple_memo_.emplace(key, fails);
        return fails;
    }

    bool compatible(uint32_t c) {
        for (int d : chosen_) {
            if (!pair_fails(uint32_t(d), c)) return false;
        }
        if (!tsurfs_.empty()) {
            for (size_t i = 0; i < chosen_.size(); ++i) {
                for (size_t j = i + 1; j < chosen_.size(); ++j) {
                    if (!triple_fails(uint32_t(chosen_[i]),
                                      uint32_t(chosen_[j]), c)) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    Graph mask_graph(uint64_t mask) const {
        Graph u(g_.order());
        while (mask) {
            int b = std::countr_zero(mask);
            mask &= mask - 1;
            u.add_edge(hedges_[b].first, hedges_[b].second);
        }
        return u;
    }

    void take(uint32_t c) {
        chosen_.push_back(int(c));
        in_set_[c] = 1;
        covered_stack_.push_back(covered_);
        covered_ |= masks_[c];
    }

    void drop(uint32_t c) {
        chosen_.pop_back();
        in_set_[c] = 0;
        covered_ = covered_stack_.back();
        covered_stack_.pop_back();
    }

    void dfs(int fill_floor) {
        if (hit_) return;
        if (int(chosen_.size()) == cond_.arity()) {
            if (covered_ == full_) hit_ = chosen_;
            return;
        }
        int slots = cond_.arity() - int(chosen_.size());
        uint64_t uncovered = full_ & ~covered_;
        if (uncovered != 0) {
            if (std::popcount(uncovered) > slots * max_bits_) return;
            int branch = -1;
            size_t fewest = SIZE_MAX;
            for (uint64_t m = uncovered; m;) {
                int b = std::countr_zero(m);
                m &= m - 1;
                if (covers_[b].size() < fewest) {
                    fewest = covers_[b].size();
                    branch = b;
                }
            }
            // Candidates that add the most new coverage go first; the pool
            // index breaks ties, so the order is fixed.
            std::vector<std::pair<int, uint32_t>> cand;
            for (uint32_t c : covers_[branch]) {
                if (banned_[c] || in_set_[c]) continue;
                cand.push_back({-std::popcount(masks_[c] & uncovered), c});
            }
            std::sort(cand.begin(), cand.end());
            std::vector<uint32_t> banned_here;
            for (auto [fresh, c] : cand) {
                (void)fresh;
                if (hit_) break;
                if (!compatible(c)) continue;
                take(c);
                dfs(0);
                drop(c);
                if (hit_) break;
                banned_[c] = 1;
                banned_here.push_back(c);
            }
            for (uint32_t c : banned_here) banned_[c] = 0;
        } else {
            for (uint32_t c = uint32_t(fill_floor); c < masks_.size(); ++c) {
                if (hit_) return;
                if (banned_[c] || in_set_[c]) continue;
                if (!compatible(c)) continue;
                take(c);
                dfs(int(c) + 1);
                drop(c);
            }
        }
    }

    const Graph& g_;
    CoveringConditions cond_;
    Engine& eng_;
    const EdgeList& hedges_;
    const std::vector<uint64_t>& masks_;
    std::vector<Surface> tsurfs_;
    uint64_t full_ = 0;
    int max_bits_ = 0;
    std::vector<std::vector<uint32_t>> covers_;
    std::vector<char> banned_, in_set_;
    std::vector<int> chosen_;
    std::vector<uint64_t> covered_stack_;
    uint64_t covered_ = 0;
    std::optional<std::vector<int>> hit_;
    std::unordered_map<uint64_t, bool> pair_memo_;
    std::unordered_map<uint64_t, bool> triple_memo_;
};

}  // namespace

CoverOutcome find_covering(const Graph& g, int gtilde, Engine& eng,
                           const CoverSearchConfig& cfg) {
    if (gtilde < 1) {
        throw std::invalid_argument(
            "find_covering: the covering conditions need gtilde >= 1");
    }
    EdgeList hedges = g.edges();
    if (hedges.size() > 64) {
        throw std::invalid_argument("find_covering: host exceeds 64 edges");
    }
    CoveringConditions cond{gtilde};

    std::map<std::pair<int, int>, int> bit;
    for (size_t e = 0; e < hedges.size(); ++e) bit[hedges[e]] = int(e);

    CoverOutcome out;
    std::vector<uint64_t> masks;
    for_each_kuratowski(g, [&](const KuratowskiSubgraph& s) {
        if (masks.size() == cfg.pool_limit) {
            out.pool_truncated = true;
            return false;
        }
        uint64_t m = 0;
        for (auto uv : s.edges) m |= uint64_t{1} << bit.at(uv);
        masks.push_back(m);
        return true;
    });
    out.pool_size = masks.size();

    CoverSearch search(g, cond, eng, hedges, masks);
    auto hit = search.run();
    out.pair_checks = search.pair_checks;
    out.triple_checks = search.triple_checks;
    if (!hit) {
        out.status =
            out.pool_truncated ? CoverStatus::Undecided : CoverStatus::None;
        return out;
    }

    // Materialize the chosen members with a second pass in the same order.
    std::vector<int> want = *hit;
    std::sort(want.begin(), want.end());
    std::vector<KuratowskiSubgraph> members(want.size());
    size_t idx = 0, got = 0;
    for_each_kuratowski(g, [&](const KuratowskiSubgraph& s) {
        if (got < want.size() && size_t(want[got]) == idx) members[got++] = s;
        ++idx;
        return got < want.size();
    });

    CoveringCertificate cert;
    cert.host = g;
    cert.gtilde = gtilde;
    cert.members = std::move(members);
    cert.coverage.assign(hedges.size(), -1);
    for (size_t e = 0; e < hedges.size(); ++e) {
        for (size_t i = 0; i < cert.members.size(); ++i) {
            if (std::binary_search(cert.members[i].edges.begin(),
                                   cert.members[i].edges.end(), hedges[e])) {
                cert.coverage[e] = int(i);
                break;
            }
        }
    }
    int arity = cond.arity();
    for (int i = 0; i < arity; ++i) {
        for (int j = i + 1; j < arity; ++j) {
            cert.pair_results.push_back({{i, j}, cond.pair_surface(), false});
        }
    }
    for (int i = 0; i < arity; ++i) {
        for (int j = i + 1; j < arity; ++j) {
            for (int k = j + 1; k < arity; ++k) {
                for (const Surface& surf : cond.triple_surfaces()) {
                    cert.triple_results.push_back({{i, j, k}, surf, false});
                }
            }
        }
    }
    out.status = CoverStatus::Found;
    out.certificate = std::move(cert);
    return out;
}

}  // namespace kcover
