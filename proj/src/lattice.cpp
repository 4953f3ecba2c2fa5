#include "sstar/lattice.hpp"

#include <algorithm>

namespace sstar {

namespace {

struct Candidate {
    std::vector<BigInt> d;
    BigInt off_norm;
    BigInt abs_solved;
    int sign_pref; // 0 when the leading non-zero off entry is positive

    bool better_than(const Candidate& o) const {
        if (off_norm != o.off_norm) return off_norm < o.off_norm;
        if (abs_solved != o.abs_solved) return abs_solved < o.abs_solved;
        if (sign_pref != o.sign_pref) return sign_pref < o.sign_pref;
        return d < o.d;
    }
};

} // namespace

KernelSearch affine_kernel_vector(const std::vector<Rational>& weights,
                                  const std::vector<std::int64_t>& bounds,
                                  std::optional<std::size_t> free_dim,
                                  std::uint64_t enumeration_cap) {
    const std::size_t n = weights.size();
    std::size_t solved = 0;
    if (free_dim) {
        solved = *free_dim;
    } else {
        for (std::size_t i = 1; i < n; ++i)
            if (bounds[i] > bounds[solved]) solved = i;
    }

    std::vector<std::size_t> off;
    BigInt count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == solved) continue;
        off.push_back(i);
        count *= 2 * BigInt(bounds[i]) + 1;
    }
    if (count > enumeration_cap)
        return KernelSearch{KernelSearch::Status::cap_exceeded, {}};

    std::optional<Candidate> best;
    std::vector<std::int64_t> d_off(off.size(), 0);
    for (std::size_t i = 0; i < off.size(); ++i) d_off[i] = -bounds[off[i]];

    auto consider = [&](std::vector<BigInt> d) {
        bool nonzero = false;
        for (const auto& x : d)
            if (x != 0) { nonzero = true; break; }
        if (!nonzero) return;
        Candidate c;
        c.abs_solved = boost::multiprecision::abs(d[solved]);
        c.off_norm = 0;
        c.sign_pref = 1;
        bool lead_seen = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == solved) continue;
            c.off_norm = std::max(c.off_norm, BigInt(boost::multiprecision::abs(d[i])));
            if (!lead_seen && d[i] != 0) {
                lead_seen = true;
                c.sign_pref = d[i] > 0 ? 0 : 1;
            }
        }
        c.d = std::move(d);
        if (!best || c.better_than(*best)) best = std::move(c);
    };

    for (;;) {
        Rational sum = 0;
        for (std::size_t i = 0; i < off.size(); ++i)
            sum += weights[off[i]] * d_off[i];

        std::vector<BigInt> d(n, 0);
        for (std::size_t i = 0; i < off.size(); ++i) d[off[i]] = d_off[i];

        if (weights[solved] == 0) {
            if (sum == 0) {
                bool off_nonzero = false;
                for (auto x : d_off)
                    if (x != 0) { off_nonzero = true; break; }
                if (off_nonzero) {
                    consider(d);
                } else if (free_dim || bounds[solved] >= 1) {
                    // the solved dimension alone carries a kernel direction
                    d[solved] = 1;
                    consider(std::move(d));
                }
            }
        } else {
            Rational t = -sum / weights[solved];
            if (boost::multiprecision::denominator(t) == 1) {
                BigInt ti = boost::multiprecision::numerator(t);
                if (free_dim || boost::multiprecision::abs(ti) <= bounds[solved]) {
                    d[solved] = ti;
                    consider(std::move(d));
                }
            }
        }

        // advance the off-dimension odometer
        std::size_t i = off.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++d_off[i] <= bounds[off[i]]) { done = false; break; }
            d_off[i] = -bounds[off[i]];
        }
        if (done) break;
    }

    if (best)
        return KernelSearch{KernelSearch::Status::found, std::move(best->d)};
    return KernelSearch{KernelSearch::Status::none, {}};
}

} // namespace sstar
