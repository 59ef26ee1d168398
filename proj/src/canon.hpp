#ifndef KCOVER_CANON_HPP
#define KCOVER_CANON_HPP

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace kcover {

/// Canonical form of a graph: the lexicographically maximal column-major
/// upper-triangle adjacency encoding over all vertex relabelings, packed
/// into 64-bit words (bit 0 of the encoding is the most significant bit
/// of words[0]). Equal for isomorphic graphs, distinct otherwise.
struct CanonicalForm {
    int order = 0;
    std::vector<uint64_t> words;

    bool operator==(const CanonicalForm& o) const {
        return order == o.order && words == o.words;
    }
    bool operator<(const CanonicalForm& o) const {
        if (order != o.order) return order < o.order;
        return words < o.words;
    }
    uint64_t hash_key() const;
};

struct CanonicalResult {
    CanonicalForm form;
    /// labeling[v] = position of vertex v in the canonical order.
    std::vector<int> labeling;
};

CanonicalResult canonicalize(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// The canonical representative: relabel(g, canonical labeling), name dropped.
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& g1, const Graph& g2);

struct CanonicalFormHash {
    size_t operator()(const CanonicalForm& f) const { return f.hash_key(); }
};

}  // namespace kcover

#endif
