#ifndef KCOVER_COVERING_HPP
#define KCOVER_COVERING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "embed.hpp"
#include "graph.hpp"
#include "kuratowski.hpp"
#include "surface.hpp"

namespace kcover {

/// What a Kuratowski covering for nonorientable genus `gtilde` must satisfy:
/// gtilde+1 Kuratowski subgraphs whose union is the whole host, with every
/// pair union failing the projective plane, and every triple union failing
/// the Klein bottle when gtilde >= 2 and also the torus when gtilde >= 3.
struct CoveringConditions {
    int gtilde = 0;

    int arity() const { return gtilde + 1; }
    Surface pair_surface() const { return Surface{false, 1}; }
    std::vector<Surface> triple_surfaces() const;
};

/// One recorded embedding probe of a pair or triple union. `members` holds
/// sorted indices into the member list; `embeds` is the engine's answer for
/// the union graph on `surface`.
struct UnionProbe {
    std::vector<int> members;
    Surface surface;
    bool embeds = false;
};

/// Validation outcome for a member list against the covering conditions.
/// The booleans are computed independently, except that a structurally
/// broken member also fails every probe that would need its edges.
struct CoveringReport {
    bool arity_ok = false;
    bool members_ok = false;   // each member a Kuratowski subdivision inside g
    bool coverage_ok = false;  // every host edge in some member
    bool pairs_ok = false;     // every pair union fails the projective plane
    bool triples_ok = false;   // every triple union fails its surfaces
    std::vector<int> coverage;  // per host edge: lowest covering member, -1 if none
    std::vector<UnionProbe> pair_results;
    std::vector<UnionProbe> triple_results;

    bool pass() const {
        return arity_ok && members_ok && coverage_ok && pairs_ok && triples_ok;
    }
};

/// Validate `members` as a Kuratowski covering of g for nonorientable genus
/// gtilde. Never throws on bad member lists: failures land in the report.
CoveringReport check_covering(const Graph& g,
                              const std::vector<KuratowskiSubgraph>& members,
                              int gtilde, Engine& eng);

/// A found covering. Members live on the host's vertex labels; `coverage`
/// maps each host edge (g.edges() order) to the lowest member containing
/// it; the probe lists record every pair/triple check, all non-embedding.
struct CoveringCertificate {
    Graph host;
    int gtilde = 0;
    std::vector<KuratowskiSubgraph> members;
    std::vector<int> coverage;
    std::vector<UnionProbe> pair_results;
    std::vector<UnionProbe> triple_results;
};

enum class CoverStatus {
    Found,      // certificate produced
    None,       // no covering exists (member pool was exhaustive)
    Undecided,  // pool truncated at the limit and nothing found among it
};

struct CoverSearchConfig {
    size_t pool_limit = 2'000'000;  // max Kuratowski subgraphs enumerated
};

struct CoverOutcome {
    CoverStatus status = CoverStatus::None;
    size_t pool_size = 0;
    bool pool_truncated = false;
    uint64_t pair_checks = 0;    // distinct pair unions probed
    uint64_t triple_checks = 0;  // distinct triple unions probed
    std::optional<CoveringCertificate> certificate;
};

/// Search for a Kuratowski covering of g. Depth-first over the enumerated
/// subdivision pool: while edges remain uncovered, branch on the uncovered
/// edge with the fewest covering members (candidates ordered by how much
/// new coverage they add); once covered, fill the remaining slots in pool
/// order. Pair and triple conditions are checked the moment a member
/// joins, memoized, and members are pairwise distinct edge sets. The first
/// covering in this fixed order wins, so reruns reproduce the certificate.
/// Throws std::invalid_argument for gtilde < 1 (the conditions are stated
/// for nonorientable surfaces only) and for hosts over 64 edges.
CoverOutcome find_covering(const Graph& g, int gtilde, Engine& eng,
                           const CoverSearchConfig& cfg = {});

}  // namespace kcover

#endif
