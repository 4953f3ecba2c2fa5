#ifndef SSTAR_TEST_HELPERS_HPP
#define SSTAR_TEST_HELPERS_HPP

#include "sstar/errors.hpp"
#include "sstar/model.hpp"

#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace sstar::test {

template <class F>
std::optional<ErrorCode> code_of(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline Point pt(std::vector<std::int64_t> coords) { return Point{std::move(coords)}; }

inline OutputValue iv(long long n) { return OutputValue::integer(BigInt(n)); }

/// Total table over the whole (small) domain with values drawn from a pool.
inline Model random_table_model(const DiscreteDomain& domain,
                                const std::vector<OutputValue>& pool, std::mt19937_64& rng) {
    std::map<Point, OutputValue> entries;
    for (const auto& p : enumerate_points(domain, 1 << 20))
        entries.emplace(p, pool[rng() % pool.size()]);
    return lookup_table_model(domain, std::move(entries), OutputValue::null_atom());
}

/// All total table models from a small domain into the given value pool,
/// enumerated as base-|pool| assignments.
inline std::vector<Model> all_table_models(const DiscreteDomain& domain,
                                           const std::vector<OutputValue>& pool) {
    auto points = enumerate_points(domain, 1 << 20);
    std::size_t n = points.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= pool.size();

    std::vector<Model> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::map<Point, OutputValue> entries;
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            entries.emplace(points[i], pool[c % pool.size()]);
            c /= pool.size();
        }
        out.push_back(lookup_table_model(domain, std::move(entries), OutputValue::null_atom()));
    }
    return out;
}

} // namespace sstar::test

#endif
