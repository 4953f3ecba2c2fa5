#ifndef SSTAR_DOMAIN_HPP
#define SSTAR_DOMAIN_HPP

#include "sstar/errors.hpp"
#include "sstar/value.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sstar {

/// A grid point; coordinate-wise equality, lexicographic order.
struct Point {
    std::vector<std::int64_t> coords;

    std::size_t dims() const { return coords.size(); }
    auto operator<=>(const Point&) const = default;

    std::string str() const;
};

/// Finite N-dimensional integer grid: dimension i ranges over {0, ..., scale_i - 1}.
class DiscreteDomain {
public:
    explicit DiscreteDomain(std::vector<std::int64_t> scales,
                            std::vector<std::string> labels = {});

    std::size_t dims() const { return scales_.size(); }
    const std::vector<std::int64_t>& scales() const { return scales_; }
    std::int64_t scale(std::size_t dim) const { return scales_.at(dim); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Exact product of scales.
    BigInt cardinality() const;

    /// Decimal log of the cardinality, for display of astronomically large grids.
    double cardinality_log10() const;

    bool contains(const Point& p) const;

    /// True when the grid has a single point; such domains are rejected by classification.
    bool degenerate() const { return cardinality() < 2; }

private:
    std::vector<std::int64_t> scales_;
    std::vector<std::string> labels_;
};

DiscreteDomain make_domain(std::vector<std::int64_t> scales,
                           std::vector<std::string> labels = {});

/// All points in lexicographic order. Throws budget_exceeded when the grid
/// has more than `budget` points.
std::vector<Point> enumerate_points(const DiscreteDomain& domain, std::uint64_t budget);

/// Same grid except dimension `dim` widened to `new_scale` (>= current scale).
DiscreteDomain extend_dimension(const DiscreteDomain& domain, std::size_t dim,
                                std::int64_t new_scale);

/// log10 of an exact non-negative integer, accurate to ~1e-12 relative.
double log10_of(const BigInt& n);

} // namespace sstar

#endif
