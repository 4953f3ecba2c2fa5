#ifndef SSTAR_CONDITION_HPP
#define SSTAR_CONDITION_HPP

#include "sstar/model.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace sstar {

/// Two readings of the novelty condition on (Y_S, Y_N):
///  - literal: the symmetric difference equals neither operand;
///  - noncontainment: each side contributes a value the other lacks.
enum class Reading { literal, noncontainment };

/// Quantifier scope for the seen subset X_S (and whether X_N must be non-empty).
enum class SubsetPolicy { allow_empty, nonempty_proper };

enum class Verdict { pass, fail };

std::string reading_name(Reading r);
std::string policy_name(SubsetPolicy p);
std::optional<Reading> reading_from_name(const std::string& s);
std::optional<SubsetPolicy> policy_from_name(const std::string& s);

struct ConditionReport {
    Verdict verdict = Verdict::pass;
    Reading reading = Reading::noncontainment;
    SubsetPolicy policy = SubsetPolicy::nonempty_proper;
    std::optional<std::set<Point>> witness_failing_subset;     // X_S with no valid X_N
    std::optional<std::pair<Point, Point>> witness_collision;  // eval-equal distinct points
    std::uint64_t subsets_examined = 0;
};

/// Exact quantifier evaluation over all subsets admitted by the policy, seen
/// subsets visited in lexicographic order so the reported witness is the
/// least failing X_S. Budget caps the number of domain points.
ConditionReport check_s_bruteforce(const Model& model, const DiscreteDomain& domain,
                                   Reading reading, SubsetPolicy policy,
                                   std::uint64_t budget);

/// Collision-based decision of the default condition (noncontainment,
/// nonempty-proper): pass iff the model is injective on the domain. A fail
/// carries the least collision pair and the induced failing subset D \ {a}.
ConditionReport check_s_fast(const Model& model, const DiscreteDomain& domain,
                             std::uint64_t budget);

/// Least eval-equal pair of distinct points, if one is found. Exhaustive scan
/// when the domain fits the budget, otherwise seeded random probing with a
/// value-to-point table (absence of a witness is then inconclusive).
std::optional<std::pair<Point, Point>> find_collision(const Model& model,
                                                      const DiscreteDomain& domain,
                                                      std::uint64_t budget,
                                                      std::uint64_t seed);

} // namespace sstar

#endif
