#ifndef KCOVER_CORPUS_HPP
#define KCOVER_CORPUS_HPP

#include <functional>
#include <string>
#include <vector>

namespace kcover {

/// One reference graph: the name rebuilds it through the deletion
/// grammar, graph6 pins the exact labeled form, surface is the surface
/// it is an obstruction for, and role records how the suites use it.
struct CorpusEntry {
    std::string name;
    std::string graph6;
    std::string surface;
    std::string role;  // "obstruction" or "obstruction cover-target"
};

/// The named reference graphs: the classical sphere pair, the order-8
/// torus, Klein bottle, and N3 obstructions, and the order-9 N4 pair.
const std::vector<CorpusEntry>& corpus();

struct CriterionResult {
    int id = 0;
    std::string tier;     // quick, order8, full
    bool pass = false;
    double seconds = 0.0;
    std::string summary;  // one line of evidence, or the first failures
};

/// Criterion ids for a tier: quick {1,2,3}, order8 {4,5,6,7},
/// full {8,9}. Throws std::invalid_argument for unknown tiers.
std::vector<int> tier_criteria(const std::string& tier);

/// Run one numbered check (1..9). Criteria that write certificates or
/// generation checkpoints put them under work_dir (created on demand;
/// empty means a directory under the system temp dir). `log` receives
/// progress lines from the long-running criteria; pass {} to discard.
/// `jobs` sets the worker thread count for the generation sweeps.
CriterionResult run_criterion(int id, const std::string& work_dir = "",
                              const std::function<void(const std::string&)>& log = {},
                              int jobs = 1);

/// All criteria of a tier in order. on_done fires after each criterion.
std::vector<CriterionResult> run_tier(
    const std::string& tier, const std::string& work_dir = "",
    const std::function<void(const CriterionResult&)>& on_done = {},
    const std::function<void(const std::string&)>& log = {}, int jobs = 1);

}  // namespace kcover

#endif
