#ifndef SSTAR_FIBERS_HPP
#define SSTAR_FIBERS_HPP

#include "sstar/model.hpp"

#include <set>
#include <vector>

namespace sstar {

/// One output value together with its full preimage class within an analyzed
/// subset. The invariant flag marks a representation shared by at least two
/// distinct appearances.
struct InformationGenerator {
    OutputValue representation;
    std::set<Point> fiber;
    bool invariant_flag = false;
};

/// Partition `subset` into preimage classes of `model`, one generator per
/// distinct output value, ordered by representation value.
std::vector<InformationGenerator> fibers(const Model& model, const std::set<Point>& subset);

} // namespace sstar

#endif
