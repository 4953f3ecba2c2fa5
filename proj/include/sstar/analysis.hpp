#ifndef SSTAR_ANALYSIS_HPP
#define SSTAR_ANALYSIS_HPP

#include "sstar/fibers.hpp"
#include "sstar/model.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace sstar {

/// |a ∩ b| / |a ∪ b| in lowest terms; J(∅, ∅) = 1.
Rational jaccard(const std::set<Point>& a, const std::set<Point>& b);

struct BlockValidity {
    std::vector<OutputValue> block;
    std::set<Point> true_preimage;   // T
    std::set<Point> guess_preimage;  // G
    Rational similarity;
};

struct ValidityReport {
    std::vector<BlockValidity> blocks;
    Rational mean;
};

/// Per-block Jaccard similarity of the preimages of `truth` and `guess`.
/// With no explicit partition, one singleton block per distinct value in the
/// range of `truth`.
ValidityReport hypothesis_validity(const Model& truth, const Model& guess,
                                   const DiscreteDomain& domain,
                                   const std::vector<std::vector<OutputValue>>& blocks,
                                   std::uint64_t budget);
ValidityReport hypothesis_validity(const Model& truth, const Model& guess,
                                   const DiscreteDomain& domain, std::uint64_t budget);

struct MemoryProof {
    std::uint64_t points_checked = 0;
    bool all_agree = false;
};

/// Tabulate the model's graph on the domain into a lookup table with NULL
/// default, and re-check pointwise agreement exhaustively.
std::pair<Model, MemoryProof> compile_memory(const Model& model, const DiscreteDomain& domain,
                                             std::uint64_t budget);

struct SplitMergeReport {
    std::vector<InformationGenerator> part1_generators;
    std::vector<InformationGenerator> part2_generators;
    std::vector<InformationGenerator> union_generators;
    // union fibers spanning both parts: one representation, appearances on each side
    std::vector<InformationGenerator> merged_generators;
};

/// Fibers of the two parts and of their union; a generator "merges" when its
/// union fiber intersects both parts.
SplitMergeReport split_experiment(const Model& model, const std::set<Point>& subset,
                                  const std::set<Point>& part1, const std::set<Point>& part2);

} // namespace sstar

#endif
