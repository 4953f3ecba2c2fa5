#include "sstar/fibers.hpp"

#include <map>

namespace sstar {

std::vector<InformationGenerator> fibers(const Model& model, const std::set<Point>& subset) {
    for (const auto& p : subset)
        if (!model.domain().contains(p))
            fail(ErrorCode::domain_mismatch, "point " + p.str() + " is outside the domain");

    std::map<OutputValue, std::set<Point>> classes;
    for (const auto& p : subset)
        classes[model.eval(p)].insert(p);

    std::vector<InformationGenerator> out;
    out.reserve(classes.size());
    for (auto& [value, points] : classes) {
        bool invariant = points.size() >= 2;
        out.push_back(InformationGenerator{value, std::move(points), invariant});
    }
    return out;
}

} // namespace sstar
