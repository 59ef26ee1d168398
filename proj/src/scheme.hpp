#ifndef KCOVER_SCHEME_HPP
#define KCOVER_SCHEME_HPP

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "surface.hpp"

namespace kcover {

/// A combinatorial embedding: a cyclic neighbor order at every vertex plus a
/// +/-1 signature on every edge. Determines a closed surface for each
/// component (two sides per edge, faces traced as flag orbits).
struct EmbeddingScheme {
    /// rotation[v] lists v's neighbors in cyclic order.
    std::vector<std::vector<int>> rotation;
    /// signature[u][v] = signature[v][u] in {+1, -1}; entries for non-edges
    /// are ignored. Row length must match rotation.size().
    std::vector<std::vector<int>> signature;

    int order() const { return static_cast<int>(rotation.size()); }
};

/// All-positive scheme with rotations in increasing neighbor order.
EmbeddingScheme default_scheme(const Graph& g);

/// Throws std::invalid_argument if the scheme does not fit g: wrong order,
/// rotation rows that are not permutations of the neighborhoods, or
/// signature entries outside {+1, -1} on edges.
void validate_scheme(const Graph& g, const EmbeddingScheme& s);

/// Closed face walks: each face as its vertex sequence (closing edge back to
/// the front implied). Every face appears exactly once, traced in one of its
/// two directions. Isolated vertices each contribute a trivial face {v}.
std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const EmbeddingScheme& s);

int face_count(const Graph& g, const EmbeddingScheme& s);

/// Sum over components of 2 - V + E - F, i.e. the total Euler genus of the
/// (one surface per component) embedding the scheme describes.
int scheme_euler_genus(const Graph& g, const EmbeddingScheme& s);

/// True when every component's surface is orientable: each signature is
/// switching-equivalent to all-positive (every cycle has signature product
/// +1).
bool scheme_orientable(const Graph& g, const EmbeddingScheme& s);

/// Whether the scheme witnesses an embedding of g into surf: the component
/// surfaces must pack into surf. Orientable surfaces take only orientable
/// schemes with total genus within budget; N_k takes total Euler genus <= k,
/// or <= k-1 when the scheme is entirely orientable (the leftover crosscap
/// cannot be absorbed by orientable pieces).
bool scheme_fits(const Graph& g, const EmbeddingScheme& s, const Surface& surf);

}  // namespace kcover

#endif
