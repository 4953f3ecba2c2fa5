#ifndef SSTAR_LATTICE_HPP
#define SSTAR_LATTICE_HPP

#include "sstar/value.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sstar {

/// Result of searching for a non-zero integer vector d with sum w_i * d_i = 0,
/// |d_i| <= bounds[i] on every dimension except an optional free one.
struct KernelSearch {
    enum class Status { found, none, cap_exceeded };
    Status status = Status::none;
    std::vector<BigInt> vector; // only when found
};

/// Bounded enumeration of the off-dimensions with the remaining coordinate
/// solved by divisibility. Among solutions, prefers small off-dimension norm,
/// then small solved coordinate, then a positive leading off entry — this
/// keeps collision witnesses minimal and reproducible.
KernelSearch affine_kernel_vector(const std::vector<Rational>& weights,
                                  const std::vector<std::int64_t>& bounds,
                                  std::optional<std::size_t> free_dim,
                                  std::uint64_t enumeration_cap);

} // namespace sstar

#endif
