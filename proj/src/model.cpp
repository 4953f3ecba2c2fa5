#include "sstar/model.hpp"

#include <algorithm>
#include <set>

namespace sstar {

bool Box::contains(const Point& p) const {
    if (p.dims() != lo.dims()) return false;
    for (std::size_t i = 0; i < p.dims(); ++i)
        if (p.coords[i] < lo.coords[i] || p.coords[i] > hi.coords[i]) return false;
    return true;
}

BigInt Box::cardinality() const {
    BigInt card = 1;
    for (std::size_t i = 0; i < dims(); ++i) {
        if (hi.coords[i] < lo.coords[i]) return 0;
        card *= BigInt(hi.coords[i] - lo.coords[i] + 1);
    }
    return card;
}

std::string kind_name(ModelKind k) {
    switch (k) {
    case ModelKind::table: return "table";
    case ModelKind::affine: return "affine";
    case ModelKind::classifier: return "classifier";
    case ModelKind::piecewise: return "piecewise";
    case ModelKind::restricted: return "restricted";
    case ModelKind::oracle_injective: return "oracle-injective";
    }
    return "?";
}

namespace {

void require_point_shape(const Point& p, std::size_t dims) {
    if (p.dims() != dims)
        fail(ErrorCode::domain_mismatch,
             "point " + p.str() + " has " + std::to_string(p.dims()) +
                 " coordinates, model domain has " + std::to_string(dims));
    for (auto c : p.coords)
        if (c < 0)
            fail(ErrorCode::domain_mismatch, "point " + p.str() + " has a negative coordinate");
}

void require_box_in_domain(const Box& box, const DiscreteDomain& domain, ErrorCode code) {
    if (box.lo.dims() != domain.dims() || box.hi.dims() != domain.dims())
        fail(code, "box dimension count does not match domain");
    for (std::size_t i = 0; i < domain.dims(); ++i) {
        if (box.lo.coords[i] < 0 || box.hi.coords[i] >= domain.scale(i) ||
            box.lo.coords[i] > box.hi.coords[i])
            fail(code, "box is not contained in the domain at dimension " + std::to_string(i));
    }
}

BigInt rational_floor(const Rational& r) {
    BigInt n = boost::multiprecision::numerator(r);
    BigInt d = boost::multiprecision::denominator(r); // always > 0
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// (a, b) -> (a+b)(a+b+1)/2 + b, folded left over the coordinates.
BigInt cantor_fold(const Point& p) {
    BigInt acc = p.coords[0];
    for (std::size_t i = 1; i < p.dims(); ++i) {
        BigInt b = p.coords[i];
        BigInt s = acc + b;
        acc = s * (s + 1) / 2 + b;
    }
    return acc;
}

} // namespace

Model::Model(DiscreteDomain domain, Payload payload)
    : domain_(std::move(domain)), payload_(std::move(payload)) {}

OutputValue Model::eval(const Point& p) const {
    require_point_shape(p, domain_.dims());
    switch (kind()) {
    case ModelKind::table: {
        const auto& t = payload_as<TablePayload>();
        auto it = t.entries.find(p);
        return it != t.entries.end() ? it->second : t.default_value;
    }
    case ModelKind::affine: {
        const auto& a = payload_as<AffinePayload>();
        Rational acc = a.bias;
        for (std::size_t i = 0; i < p.dims(); ++i)
            acc += a.weights[i] * p.coords[i];
        return OutputValue::rational(acc);
    }
    case ModelKind::classifier: {
        const auto& c = payload_as<ClassifierPayload>();
        const ClassifierRule* best = nullptr;
        Rational best_score;
        for (const auto& rule : c.rules) {
            BigInt dist = 0;
            for (std::size_t i = 0; i < p.dims(); ++i)
                dist += boost::multiprecision::abs(BigInt(p.coords[i] - rule.anchor.coords[i]));
            Rational score = 1 - rule.slope * Rational(dist);
            if (!best || score > best_score ||
                (score == best_score && rule.indicator < best->indicator)) {
                best = &rule;
                best_score = score;
            }
        }
        // snap to the grid {0, 1/q, ..., 1}, round half up
        BigInt steps = rational_floor(best_score * c.q + Rational(1, 2));
        if (steps < 0) steps = 0;
        if (steps > c.q) steps = c.q;
        return OutputValue::score_pair(Rational(steps, c.q), best->indicator);
    }
    case ModelKind::piecewise: {
        const auto& pw = payload_as<PiecewisePayload>();
        for (const auto& piece : pw.pieces)
            if (piece.box.contains(p)) return piece.model->eval(p);
        return pw.fallback;
    }
    case ModelKind::restricted: {
        const auto& r = payload_as<RestrictedPayload>();
        return r.box.contains(p) ? r.inner->eval(p) : r.outside;
    }
    case ModelKind::oracle_injective:
        return OutputValue::integer(cantor_fold(p));
    }
    fail(ErrorCode::domain_mismatch, "unreachable model kind");
}

Model lookup_table_model(DiscreteDomain domain, std::map<Point, OutputValue> entries,
                         OutputValue default_value) {
    for (const auto& [p, v] : entries) {
        (void)v;
        if (!domain.contains(p))
            fail(ErrorCode::invalid_entry, "table entry point " + p.str() + " is outside the domain");
    }
    return Model(std::move(domain), TablePayload{std::move(entries), std::move(default_value)});
}

Model affine_model(DiscreteDomain domain, std::vector<Rational> weights, Rational bias) {
    if (weights.size() != domain.dims())
        fail(ErrorCode::invalid_weights,
             "expected " + std::to_string(domain.dims()) + " weights, got " +
                 std::to_string(weights.size()));
    return Model(std::move(domain), AffinePayload{std::move(weights), std::move(bias)});
}

Model classifier_model(DiscreteDomain domain, std::vector<ClassifierRule> rules,
                       std::int64_t q) {
    if (rules.empty())
        fail(ErrorCode::invalid_classifier, "indicator set must be non-empty");
    if (q < 1)
        fail(ErrorCode::invalid_classifier, "quantization denominator must be >= 1");
    std::set<std::string> names;
    for (const auto& r : rules) {
        if (!names.insert(r.indicator).second)
            fail(ErrorCode::invalid_classifier, "duplicate indicator " + r.indicator);
        if (r.anchor.dims() != domain.dims())
            fail(ErrorCode::invalid_classifier,
                 "anchor " + r.anchor.str() + " does not match domain dimensions");
    }
    return Model(std::move(domain), ClassifierPayload{std::move(rules), q});
}

Model piecewise_model(DiscreteDomain domain, std::vector<PiecewisePiece> pieces,
                      OutputValue fallback) {
    for (const auto& piece : pieces)
        require_box_in_domain(piece.box, domain, ErrorCode::invalid_region);
    return Model(std::move(domain), PiecewisePayload{std::move(pieces), std::move(fallback)});
}

Model restrict_model(const Model& inner, Box box, OutputValue outside) {
    require_box_in_domain(box, inner.domain(), ErrorCode::invalid_region);
    return Model(inner.domain(),
                 RestrictedPayload{std::move(box), std::make_shared<Model>(inner),
                                   std::move(outside)});
}

Model oracle_injective_model(DiscreteDomain domain) {
    return Model(std::move(domain), OracleInjectivePayload{});
}

std::optional<RangeBound> finite_range_bound(const Model& model) {
    switch (model.kind()) {
    case ModelKind::table: {
        const auto& t = model.payload_as<TablePayload>();
        return RangeBound{BigInt(t.entries.size()) + 1, "table entries plus default"};
    }
    case ModelKind::affine: {
        const auto& a = model.payload_as<AffinePayload>();
        for (const auto& w : a.weights)
            if (w != 0) return std::nullopt;
        return RangeBound{1, "constant affine map"};
    }
    case ModelKind::classifier: {
        const auto& c = model.payload_as<ClassifierPayload>();
        return RangeBound{BigInt(c.rules.size()) * (BigInt(c.q) + 1),
                          "indicators x quantization grid"};
    }
    case ModelKind::piecewise: {
        const auto& pw = model.payload_as<PiecewisePayload>();
        BigInt total = 1; // fallback value
        for (const auto& piece : pw.pieces) {
            BigInt contrib = piece.box.cardinality();
            if (auto inner = finite_range_bound(*piece.model))
                contrib = std::min(contrib, inner->bound);
            total += contrib;
        }
        return RangeBound{total, "fixed piece boxes plus fallback"};
    }
    case ModelKind::restricted: {
        const auto& r = model.payload_as<RestrictedPayload>();
        BigInt contrib = r.box.cardinality();
        if (auto inner = finite_range_bound(*r.inner))
            contrib = std::min(contrib, inner->bound);
        return RangeBound{contrib + 1, "restriction box plus outside value"};
    }
    case ModelKind::oracle_injective:
        return std::nullopt;
    }
    return std::nullopt;
}

RangeResult range_of(const Model& model, const DiscreteDomain& domain, std::uint64_t budget) {
    if (domain.cardinality() <= budget) {
        std::set<OutputValue> values;
        for (const auto& p : enumerate_points(domain, budget))
            values.insert(model.eval(p));
        return RangeResult{std::move(values), std::nullopt};
    }
    if (auto bound = finite_range_bound(model))
        return RangeResult{std::nullopt, std::move(bound)};
    fail(ErrorCode::budget_exceeded,
         "domain too large to enumerate and model kind has no symbolic range bound");
}

} // namespace sstar
