#include "sstar/condition.hpp"

#include "sstar/lattice.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

namespace sstar {

std::string reading_name(Reading r) {
    return r == Reading::literal ? "literal" : "noncontainment";
}
std::string policy_name(SubsetPolicy p) {
    return p == SubsetPolicy::allow_empty ? "allow-empty" : "nonempty-proper";
}
std::optional<Reading> reading_from_name(const std::string& s) {
    if (s == "literal") return Reading::literal;
    if (s == "noncontainment") return Reading::noncontainment;
    return std::nullopt;
}
std::optional<SubsetPolicy> policy_from_name(const std::string& s) {
    if (s == "allow-empty") return SubsetPolicy::allow_empty;
    if (s == "nonempty-proper") return SubsetPolicy::nonempty_proper;
    return std::nullopt;
}

namespace {

constexpr std::size_t kBruteforceMaxPoints = 24;

bool condition_holds(Reading reading, std::uint64_t ys, std::uint64_t yn) {
    if (reading == Reading::literal) {
        std::uint64_t sym = ys ^ yn;
        return sym != yn && sym != ys;
    }
    return (yn & ~ys) != 0 && (ys & ~yn) != 0;
}

// Preorder walk of the subset tree = lexicographic order of subsets as
// increasing index sequences. Returns false when the visitor stopped early.
template <class Visit>
bool walk_subsets(std::size_t n, std::vector<std::size_t>& cur, std::size_t start,
                  Visit&& visit) {
    if (!visit(cur)) return false;
    for (std::size_t j = start; j < n; ++j) {
        cur.push_back(j);
        if (!walk_subsets(n, cur, j + 1, visit)) return false;
        cur.pop_back();
    }
    return true;
}

// Does some admissible X_N inside the complement satisfy the reading?
bool exists_novel_subset(Reading reading, std::uint64_t ys,
                         const std::vector<std::uint64_t>& complement_bits) {
    const std::size_t n = complement_bits.size();
    std::vector<std::size_t> cur;
    bool found = false;
    walk_subsets(n, cur, 0, [&](const std::vector<std::size_t>& idx) {
        if (!idx.empty()) {
            std::uint64_t yn = 0;
            for (auto i : idx) yn |= complement_bits[i];
            if (condition_holds(reading, ys, yn)) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

Point nth_lex_point(const DiscreteDomain& domain, BigInt index) {
    Point p{std::vector<std::int64_t>(domain.dims(), 0)};
    for (std::size_t i = domain.dims(); i > 0;) {
        --i;
        BigInt s = domain.scale(i);
        p.coords[i] = static_cast<std::int64_t>(index % s);
        index /= s;
    }
    return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d4a9e26c2b52a5ULL;
    return x ^ (x >> 31);
}

// Least collision pair among the first `count` lexicographic points.
std::optional<std::pair<Point, Point>> scan_prefix_for_collision(const Model& model,
                                                                 const DiscreteDomain& domain,
                                                                 const BigInt& count) {
    std::map<OutputValue, std::vector<Point>> classes;
    BigInt total = domain.cardinality();
    BigInt limit = std::min(count, total);
    for (BigInt i = 0; i < limit; ++i) {
        Point p = nth_lex_point(domain, i);
        auto& pts = classes[model.eval(p)];
        if (pts.size() < 2) pts.push_back(p);
    }
    std::optional<std::pair<Point, Point>> best;
    for (const auto& [v, pts] : classes) {
        (void)v;
        if (pts.size() < 2) continue;
        std::pair<Point, Point> pair{pts[0], pts[1]};
        if (!best || pair < *best) best = pair;
    }
    return best;
}

std::pair<Point, Point> kernel_to_pair(const std::vector<BigInt>& kernel,
                                       std::size_t dims) {
    Point p{std::vector<std::int64_t>(dims, 0)};
    Point q = p;
    for (std::size_t i = 0; i < dims; ++i) {
        std::int64_t d = static_cast<std::int64_t>(kernel[i]);
        p.coords[i] = std::max<std::int64_t>(0, -d);
        q.coords[i] = p.coords[i] + d;
    }
    if (q < p) std::swap(p, q);
    return {p, q};
}

// No kernel fits the box when, after sorting by |weight|, each weight
// outweighs every combination of the smaller ones.
bool superincreasing_weights(const std::vector<Rational>& weights,
                             const std::vector<std::int64_t>& bounds) {
    std::vector<std::size_t> order(weights.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return boost::multiprecision::abs(weights[a]) < boost::multiprecision::abs(weights[b]);
    });
    Rational reach = 0;
    for (auto i : order) {
        Rational w = boost::multiprecision::abs(weights[i]);
        if (bounds[i] > 0) {
            if (w <= reach) return false;
            reach += w * bounds[i];
        }
    }
    return true;
}

// Kernel supported on at most two dimensions, found in closed form.
std::optional<std::vector<BigInt>> two_dim_kernel(const std::vector<Rational>& weights,
                                                  const std::vector<std::int64_t>& bounds) {
    const std::size_t n = weights.size();
    for (std::size_t i = 0; i < n; ++i)
        if (weights[i] == 0 && bounds[i] >= 1) {
            std::vector<BigInt> d(n, 0);
            d[i] = 1;
            return d;
        }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (weights[i] == 0 || weights[j] == 0) continue;
            // minimal integer solution to w_i d_i + w_j d_j = 0
            Rational ratio = weights[j] / weights[i]; // already in lowest terms
            BigInt di = boost::multiprecision::numerator(ratio);
            BigInt dj = -boost::multiprecision::denominator(ratio);
            if (boost::multiprecision::abs(di) <= bounds[i] &&
                boost::multiprecision::abs(dj) <= bounds[j]) {
                std::vector<BigInt> d(n, 0);
                d[i] = di;
                d[j] = dj;
                return d;
            }
        }
    }
    return std::nullopt;
}

std::optional<std::pair<Point, Point>> affine_symbolic_collision(const Model& model) {
    const auto& a = model.payload_as<AffinePayload>();
    std::vector<std::int64_t> bounds;
    for (auto s : model.domain().scales()) bounds.push_back(s - 1);

    auto search = affine_kernel_vector(a.weights, bounds, std::nullopt, 1'000'000);
    if (search.status == KernelSearch::Status::none) return std::nullopt;
    if (search.status == KernelSearch::Status::found)
        return kernel_to_pair(search.vector, bounds.size());

    // enumeration too large: fall back to closed-form certificates
    if (superincreasing_weights(a.weights, bounds)) return std::nullopt;
    if (auto d = two_dim_kernel(a.weights, bounds)) return kernel_to_pair(*d, bounds.size());
    fail(ErrorCode::budget_exceeded, "affine kernel enumeration too large");
}

} // namespace

ConditionReport check_s_bruteforce(const Model& model, const DiscreteDomain& domain,
                                   Reading reading, SubsetPolicy policy,
                                   std::uint64_t budget) {
    auto points = enumerate_points(domain, budget);
    const std::size_t n = points.size();
    if (n > kBruteforceMaxPoints)
        fail(ErrorCode::budget_exceeded,
             "brute-force check is limited to " + std::to_string(kBruteforceMaxPoints) +
                 " points");

    // dense value ids so subsets of the range fit in a word
    std::map<OutputValue, std::size_t> ids;
    std::vector<std::uint64_t> bit_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        OutputValue v = model.eval(points[i]);
        auto [it, fresh] = ids.emplace(std::move(v), ids.size());
        (void)fresh;
        bit_of[i] = std::uint64_t{1} << it->second;
    }

    ConditionReport report;
    report.reading = reading;
    report.policy = policy;

    std::vector<std::size_t> cur;
    std::vector<char> in_xs(n, 0);
    walk_subsets(n, cur, 0, [&](const std::vector<std::size_t>& xs) {
        if (policy == SubsetPolicy::nonempty_proper && (xs.empty() || xs.size() == n))
            return true;
        ++report.subsets_examined;

        std::uint64_t ys = 0;
        std::fill(in_xs.begin(), in_xs.end(), 0);
        for (auto i : xs) {
            ys |= bit_of[i];
            in_xs[i] = 1;
        }
        std::vector<std::uint64_t> complement_bits;
        for (std::size_t i = 0; i < n; ++i)
            if (!in_xs[i]) complement_bits.push_back(bit_of[i]);
        if (exists_novel_subset(reading, ys, complement_bits)) return true;

        report.verdict = Verdict::fail;
        std::set<Point> witness;
        for (auto i : xs) witness.insert(points[i]);
        report.witness_failing_subset = std::move(witness);
        return false;
    });

    if (report.verdict == Verdict::fail && reading == Reading::noncontainment) {
        if (auto pair = scan_prefix_for_collision(model, domain, domain.cardinality()))
            report.witness_collision = pair;
    }
    return report;
}

ConditionReport check_s_fast(const Model& model, const DiscreteDomain& domain,
                             std::uint64_t budget) {
    ConditionReport report;
    report.reading = Reading::noncontainment;
    report.policy = SubsetPolicy::nonempty_proper;

    std::optional<std::pair<Point, Point>> collision;
    const BigInt card = domain.cardinality();

    if (card <= budget) {
        collision = scan_prefix_for_collision(model, domain, card);
    } else if (auto bound = finite_range_bound(model);
               bound && bound->bound < card && bound->bound + 1 <= budget) {
        // any bound+1 points must repeat a value
        collision = scan_prefix_for_collision(model, domain, bound->bound + 1);
    } else if (model.kind() == ModelKind::affine) {
        collision = affine_symbolic_collision(model);
    } else if (model.kind() != ModelKind::oracle_injective) {
        fail(ErrorCode::budget_exceeded,
             "domain too large for collision scan and no symbolic analysis for kind " +
                 kind_name(model.kind()));
    }

    if (collision) {
        report.verdict = Verdict::fail;
        report.witness_collision = collision;
        if (card <= budget) {
            std::set<Point> xs;
            for (const auto& p : enumerate_points(domain, budget))
                if (p != collision->first) xs.insert(p);
            report.witness_failing_subset = std::move(xs);
        }
    }
    return report;
}

std::optional<std::pair<Point, Point>> find_collision(const Model& model,
                                                      const DiscreteDomain& domain,
                                                      std::uint64_t budget,
                                                      std::uint64_t seed) {
    const BigInt card = domain.cardinality();
    if (card <= budget) return scan_prefix_for_collision(model, domain, card);

    std::map<OutputValue, Point> seen;
    for (std::uint64_t k = 0; k < budget; ++k) {
        std::mt19937_64 rng(splitmix64(seed + k));
        Point p{std::vector<std::int64_t>(domain.dims(), 0)};
        for (std::size_t i = 0; i < domain.dims(); ++i)
            p.coords[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(domain.scale(i)));
        auto [it, fresh] = seen.emplace(model.eval(p), p);
        if (!fresh && it->second != p) {
            Point a = it->second, b = p;
            if (b < a) std::swap(a, b);
            return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

} // namespace sstar
