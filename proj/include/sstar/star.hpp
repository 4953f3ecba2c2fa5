#ifndef SSTAR_STAR_HPP
#define SSTAR_STAR_HPP

#include "sstar/condition.hpp"
#include "sstar/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sstar {

enum class DimVerdict { pass, fail, unknown };
enum class CertificateKind { pigeonhole, symbolic_injective, collision_witness, sampling_exhausted };
enum class OverallVerdict { complete_learning, non_learning, undetermined };

std::string dim_verdict_name(DimVerdict v);
std::string certificate_name(CertificateKind c);
std::string overall_name(OverallVerdict v);
std::optional<OverallVerdict> overall_from_name(const std::string& s);

struct CollisionWitness {
    Point a;
    Point b;
    OutputValue value;
    // scale the tested dimension must reach for both points to be valid
    std::int64_t required_scale = 0;
};

/// One dimension's Condition S* result. A fail always carries a sound
/// certificate; a pass is only ever claimed with a symbolic injectivity proof.
struct StarDimEntry {
    std::size_t dim = 0;
    DimVerdict verdict = DimVerdict::unknown;
    CertificateKind certificate = CertificateKind::sampling_exhausted;
    std::optional<CollisionWitness> witness;
    std::optional<BigInt> range_bound;
    std::string bound_justification;
    std::optional<std::int64_t> flagged_scale;       // scheduled scale that broke the bound
    std::optional<BigInt> flagged_cardinality;
    std::string note;
};

struct StarReport {
    std::vector<StarDimEntry> dims;
    OverallVerdict overall = OverallVerdict::undetermined;
    std::vector<std::int64_t> schedule_multipliers;
    std::uint64_t sample_budget = 0;
    std::uint64_t seed = 0;
};

/// Default extension schedule: double the scale eight times.
std::vector<std::int64_t> default_schedule_multipliers();

/// Decide Condition S* for one dimension against a finite increasing schedule
/// of extended scales. Certificates, in order of preference: pigeonhole,
/// symbolic-injective, collision-witness, sampling-exhausted.
StarDimEntry check_s_star(const Model& model, const DiscreteDomain& domain, std::size_t dim,
                          const std::vector<std::int64_t>& schedule_scales,
                          std::uint64_t sample_budget, std::uint64_t seed);

/// Run check_s_star on every dimension. Overall verdict: non-learning when any
/// dimension fails, complete-learning when every dimension carries a symbolic
/// pass, undetermined otherwise.
StarReport classify(const Model& model, const DiscreteDomain& domain,
                    const std::vector<std::int64_t>& schedule_multipliers,
                    std::uint64_t sample_budget, std::uint64_t seed);

} // namespace sstar

#endif
