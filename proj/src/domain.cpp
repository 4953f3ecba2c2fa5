#include "sstar/domain.hpp"

#include <cmath>
#include <sstream>

namespace sstar {

std::string Point::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i];
    }
    os << ")";
    return os.str();
}

DiscreteDomain::DiscreteDomain(std::vector<std::int64_t> scales,
                               std::vector<std::string> labels)
    : scales_(std::move(scales)), labels_(std::move(labels)) {
    if (scales_.empty())
        fail(ErrorCode::invalid_domain, "domain needs at least one dimension");
    for (auto s : scales_) {
        if (s < 1)
            fail(ErrorCode::invalid_domain,
                 "every scale must be >= 1, got " + std::to_string(s));
    }
    if (!labels_.empty() && labels_.size() != scales_.size())
        fail(ErrorCode::invalid_domain, "label count does not match dimension count");
}

BigInt DiscreteDomain::cardinality() const {
    BigInt card = 1;
    for (auto s : scales_) card *= s;
    return card;
}

double DiscreteDomain::cardinality_log10() const { return log10_of(cardinality()); }

bool DiscreteDomain::contains(const Point& p) const {
    if (p.dims() != dims()) return false;
    for (std::size_t i = 0; i < dims(); ++i)
        if (p.coords[i] < 0 || p.coords[i] >= scales_[i]) return false;
    return true;
}

DiscreteDomain make_domain(std::vector<std::int64_t> scales,
                           std::vector<std::string> labels) {
    return DiscreteDomain(std::move(scales), std::move(labels));
}

std::vector<Point> enumerate_points(const DiscreteDomain& domain, std::uint64_t budget) {
    if (domain.cardinality() > budget)
        fail(ErrorCode::budget_exceeded,
             "domain has " + domain.cardinality().str() + " points, budget is " +
                 std::to_string(budget));
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(domain.cardinality()));
    Point p{std::vector<std::int64_t>(domain.dims(), 0)};
    const auto& scales = domain.scales();
    for (;;) {
        out.push_back(p);
        // odometer increment, last dimension fastest
        std::size_t i = domain.dims();
        while (i > 0) {
            --i;
            if (++p.coords[i] < scales[i]) break;
            p.coords[i] = 0;
            if (i == 0) return out;
        }
    }
}

DiscreteDomain extend_dimension(const DiscreteDomain& domain, std::size_t dim,
                                std::int64_t new_scale) {
    if (dim >= domain.dims())
        fail(ErrorCode::invalid_extension, "dimension index out of range");
    if (new_scale < domain.scale(dim))
        fail(ErrorCode::invalid_extension,
             "new scale " + std::to_string(new_scale) + " is smaller than current " +
                 std::to_string(domain.scale(dim)));
    auto scales = domain.scales();
    scales[dim] = new_scale;
    return DiscreteDomain(std::move(scales), domain.labels());
}

double log10_of(const BigInt& n) {
    if (n <= 0) return -std::numeric_limits<double>::infinity();
    const std::string s = n.str();
    const std::size_t lead = std::min<std::size_t>(s.size(), 15);
    const double mantissa = std::stod(s.substr(0, lead));
    return std::log10(mantissa) + static_cast<double>(s.size() - lead);
}

} // namespace sstar
