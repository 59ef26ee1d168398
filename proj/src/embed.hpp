#ifndef KCOVER_EMBED_HPP
#define KCOVER_EMBED_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "graph.hpp"
#include "scheme.hpp"
#include "surface.hpp"

namespace kcover {

/// Euler-formula bound: a simple connected graph with E >= 2 has F <= 2E/3
/// faces (every face boundary has >= 3 sides), so any embedding has Euler
/// genus >= 2 - V + E - max(1, 2E/3). Summed over components, clamped at 0.
/// embeds() can never succeed on a surface below this.
int euler_genus_lower_bound(const Graph& g);

struct SearchConfig {
    /// Backtracking node limit; 0 means unlimited (exact decision).
    uint64_t max_nodes = 0;
};

/// Raised internally when a node-limited search runs out of budget.
struct SearchLimitReached : std::runtime_error {
    SearchLimitReached() : std::runtime_error("embedding search node limit reached") {}
};

struct NonorientableGenus {
    int genus = 0;       // 0 is reported for planar graphs (no N_0 exists)
    bool planar = false;
};

/// Embeddability decisions with a memo cache keyed by canonical form.
/// All queries are exact; every positive answer is backed by a witness
/// scheme found by the search. Safe for concurrent use.
class Engine {
public:
    /// Reads and writes a persistent result cache under $KCOVER_CACHE_DIR
    /// when the variable is set and use_cache_dir is true.
    explicit Engine(bool use_cache_dir = true);
    ~Engine();

    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    bool embeds(const Graph& g, const Surface& s);

    /// Node-limited variant: nullopt when the limit was hit undecided.
    std::optional<bool> embeds(const Graph& g, const Surface& s,
                               const SearchConfig& cfg);

    /// Witness scheme for a positive embeds() answer; nullopt when the graph
    /// does not embed.
    std::optional<EmbeddingScheme> find_embedding(const Graph& g, const Surface& s);

    int orientable_genus(const Graph& g);
    NonorientableGenus nonorientable_genus(const Graph& g);

    uint64_t nodes_explored() const;
    uint64_t cache_hits() const;
    size_t cache_size() const;

    /// Rewrites the spill file (no-op without a cache directory).
    void save_cache() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Exhaustive reference implementation: enumerates every rotation system and
/// one signature per switching class. Same contract as Engine::embeds.
/// Throws std::invalid_argument when the scheme count exceeds `cap`.
bool oracle_embeds(const Graph& g, const Surface& s, uint64_t cap = 10'000'000);

/// Minimal Euler genus over the orientable and over the nonorientable schemes
/// of a connected graph, found by the same exhaustive enumeration; the sweep
/// stops early once both minima reach the Euler-bound floor. A tree has no
/// nonorientable scheme: that slot reports INT_MAX/4.
struct OracleProfile {
    int orientable_eg;
    int nonorientable_eg;
};
OracleProfile oracle_profile(const Graph& g, uint64_t cap = 10'000'000);

}  // namespace kcover

#endif
