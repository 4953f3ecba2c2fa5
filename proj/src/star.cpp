#include "sstar/star.hpp"

#include "sstar/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace sstar {

std::string dim_verdict_name(DimVerdict v) {
    switch (v) {
    case DimVerdict::pass: return "pass";
    case DimVerdict::fail: return "fail";
    case DimVerdict::unknown: return "unknown";
    }
    return "?";
}

std::string certificate_name(CertificateKind c) {
    switch (c) {
    case CertificateKind::pigeonhole: return "pigeonhole";
    case CertificateKind::symbolic_injective: return "symbolic-injective";
    case CertificateKind::collision_witness: return "collision-witness";
    case CertificateKind::sampling_exhausted: return "sampling-exhausted";
    }
    return "?";
}

std::string overall_name(OverallVerdict v) {
    switch (v) {
    case OverallVerdict::complete_learning: return "complete-learning";
    case OverallVerdict::non_learning: return "non-learning";
    case OverallVerdict::undetermined: return "undetermined";
    }
    return "?";
}

std::optional<OverallVerdict> overall_from_name(const std::string& s) {
    if (s == "complete-learning" || s == "learning") return OverallVerdict::complete_learning;
    if (s == "non-learning") return OverallVerdict::non_learning;
    if (s == "undetermined") return OverallVerdict::undetermined;
    return std::nullopt;
}

std::vector<std::int64_t> default_schedule_multipliers() {
    return {2, 4, 8, 16, 32, 64, 128, 256};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d4a9e26c2b52a5ULL;
    return x ^ (x >> 31);
}

CollisionWitness make_witness(const Model& model, Point a, Point b, std::size_t dim) {
    if (b < a) std::swap(a, b);
    OutputValue va = model.eval(a);
    OutputValue vb = model.eval(b);
    if (!(va == vb) || a == b)
        throw std::logic_error("collision witness failed verification");
    std::int64_t required = std::max(a.coords[dim], b.coords[dim]) + 1;
    return CollisionWitness{std::move(a), std::move(b), std::move(va), required};
}

} // namespace

StarDimEntry check_s_star(const Model& model, const DiscreteDomain& domain, std::size_t dim,
                          const std::vector<std::int64_t>& schedule_scales,
                          std::uint64_t sample_budget, std::uint64_t seed) {
    if (dim >= domain.dims())
        fail(ErrorCode::invalid_schedule, "dimension index out of range");
    if (schedule_scales.empty())
        fail(ErrorCode::invalid_schedule, "extension schedule is empty");
    for (std::size_t i = 0; i < schedule_scales.size(); ++i) {
        if (schedule_scales[i] < domain.scale(dim))
            fail(ErrorCode::invalid_schedule, "scheduled scale shrinks the dimension");
        if (i > 0 && schedule_scales[i] <= schedule_scales[i - 1])
            fail(ErrorCode::invalid_schedule, "schedule must be strictly increasing");
    }

    StarDimEntry entry;
    entry.dim = dim;

    // (a) finite reachable range vs growing extension cardinality
    if (auto bound = finite_range_bound(model)) {
        entry.range_bound = bound->bound;
        entry.bound_justification = bound->justification;
        for (auto scale : schedule_scales) {
            DiscreteDomain ext = extend_dimension(domain, dim, scale);
            if (ext.cardinality() > bound->bound) {
                entry.verdict = DimVerdict::fail;
                entry.certificate = CertificateKind::pigeonhole;
                entry.flagged_scale = scale;
                entry.flagged_cardinality = ext.cardinality();
                if (auto pair = find_collision(model, ext, sample_budget, seed))
                    entry.witness = make_witness(model, pair->first, pair->second, dim);
                return entry;
            }
        }
    }

    // (b) symbolic injectivity for kinds that admit a proof
    if (model.kind() == ModelKind::oracle_injective) {
        entry.verdict = DimVerdict::pass;
        entry.certificate = CertificateKind::symbolic_injective;
        entry.note = "bijective point pairing, injective on every extension";
        return entry;
    }
    if (model.kind() == ModelKind::affine) {
        const auto& a = model.payload_as<AffinePayload>();
        std::vector<std::int64_t> bounds;
        for (auto s : domain.scales()) bounds.push_back(s - 1);
        auto search = affine_kernel_vector(a.weights, bounds, dim, 1'000'000);
        if (search.status == KernelSearch::Status::none) {
            entry.verdict = DimVerdict::pass;
            entry.certificate = CertificateKind::symbolic_injective;
            entry.note = "no integer kernel vector within the off-dimension bounds";
            return entry;
        }
        if (search.status == KernelSearch::Status::found) {
            Point p{std::vector<std::int64_t>(domain.dims(), 0)};
            Point q = p;
            for (std::size_t i = 0; i < domain.dims(); ++i) {
                std::int64_t d = static_cast<std::int64_t>(search.vector[i]);
                p.coords[i] = std::max<std::int64_t>(0, -d);
                q.coords[i] = p.coords[i] + d;
            }
            entry.verdict = DimVerdict::fail;
            entry.certificate = CertificateKind::collision_witness;
            OutputValue va = model.eval(p);
            if (!(va == model.eval(q)))
                throw std::logic_error("affine kernel vector failed verification");
            std::int64_t required = std::max(p.coords[dim], q.coords[dim]) + 1;
            entry.witness = CollisionWitness{std::move(p), std::move(q), std::move(va), required};
            return entry;
        }
        // cap exceeded: fall through to sampling
    }

    // (c) seeded collision search on each scheduled extension
    for (std::size_t step = 0; step < schedule_scales.size(); ++step) {
        DiscreteDomain ext = extend_dimension(domain, dim, schedule_scales[step]);
        if (auto pair = find_collision(model, ext, sample_budget, splitmix64(seed) + step)) {
            entry.verdict = DimVerdict::fail;
            entry.certificate = CertificateKind::collision_witness;
            entry.flagged_scale = schedule_scales[step];
            entry.witness = make_witness(model, pair->first, pair->second, dim);
            return entry;
        }
    }

    entry.verdict = DimVerdict::unknown;
    entry.certificate = CertificateKind::sampling_exhausted;
    return entry;
}

StarReport classify(const Model& model, const DiscreteDomain& domain,
                    const std::vector<std::int64_t>& schedule_multipliers,
                    std::uint64_t sample_budget, std::uint64_t seed) {
    if (domain.degenerate())
        fail(ErrorCode::degenerate_domain,
             "domains with fewer than two points cannot be classified");
    if (schedule_multipliers.empty())
        fail(ErrorCode::invalid_schedule, "extension schedule is empty");

    StarReport report;
    report.schedule_multipliers = schedule_multipliers;
    report.sample_budget = sample_budget;
    report.seed = seed;

    bool any_fail = false;
    bool all_pass = true;
    for (std::size_t dim = 0; dim < domain.dims(); ++dim) {
        std::vector<std::int64_t> scales;
        for (auto m : schedule_multipliers) {
            if (m < 1) fail(ErrorCode::invalid_schedule, "schedule multipliers must be >= 1");
            std::int64_t s = domain.scale(dim) * m;
            if (scales.empty() || s > scales.back()) scales.push_back(s);
        }
        StarDimEntry entry =
            check_s_star(model, domain, dim, scales, sample_budget, splitmix64(seed + dim));
        any_fail = any_fail || entry.verdict == DimVerdict::fail;
        all_pass = all_pass && entry.verdict == DimVerdict::pass;
        report.dims.push_back(std::move(entry));
    }

    report.overall = any_fail  ? OverallVerdict::non_learning
                     : all_pass ? OverallVerdict::complete_learning
                                : OverallVerdict::undetermined;
    return report;
}

} // namespace sstar
