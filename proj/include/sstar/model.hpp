#ifndef SSTAR_MODEL_HPP
#define SSTAR_MODEL_HPP

#include "sstar/domain.hpp"
#include "sstar/value.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace sstar {

class Model;
using ModelPtr = std::shared_ptr<const Model>;

/// Axis-aligned box, bounds inclusive.
struct Box {
    Point lo;
    Point hi;

    std::size_t dims() const { return lo.dims(); }
    bool contains(const Point& p) const;
    BigInt cardinality() const;
};

struct TablePayload {
    std::map<Point, OutputValue> entries;
    OutputValue default_value;
};

struct AffinePayload {
    std::vector<Rational> weights;
    Rational bias;
};

struct ClassifierRule {
    std::string indicator;
    Point anchor;
    Rational slope;
};

/// Scorer with a finite indicator set and scores quantized to {0, 1/q, ..., 1}.
/// The per-indicator raw score is 1 - slope * L1(x, anchor); the emitted value
/// is (quantized best score, best indicator), ties broken by indicator name.
struct ClassifierPayload {
    std::vector<ClassifierRule> rules;
    std::int64_t q = 1;
};

struct PiecewisePiece {
    Box box;
    ModelPtr model;
};

struct PiecewisePayload {
    std::vector<PiecewisePiece> pieces;
    OutputValue fallback;
};

struct RestrictedPayload {
    Box box;
    ModelPtr inner;
    OutputValue outside;
};

/// Bijective pairing of grid points with integers; injective on every
/// extension by construction. Stand-in for a model that always separates
/// unseen inputs.
struct OracleInjectivePayload {};

enum class ModelKind { table, affine, classifier, piecewise, restricted, oracle_injective };

std::string kind_name(ModelKind k);

/// A total, pure mapping from domain points to exact output values.
/// Evaluation stays well defined on any extension of the domain.
class Model {
public:
    using Payload = std::variant<TablePayload, AffinePayload, ClassifierPayload,
                                 PiecewisePayload, RestrictedPayload, OracleInjectivePayload>;

    Model(DiscreteDomain domain, Payload payload);

    ModelKind kind() const { return static_cast<ModelKind>(payload_.index()); }
    const DiscreteDomain& domain() const { return domain_; }
    const Payload& payload() const { return payload_; }

    template <class T>
    const T& payload_as() const { return std::get<T>(payload_); }

    /// Evaluate at a point of the domain or of any extension of it.
    OutputValue eval(const Point& p) const;

private:
    DiscreteDomain domain_;
    Payload payload_;
};

Model lookup_table_model(DiscreteDomain domain, std::map<Point, OutputValue> entries,
                         OutputValue default_value);
Model affine_model(DiscreteDomain domain, std::vector<Rational> weights, Rational bias);
Model classifier_model(DiscreteDomain domain, std::vector<ClassifierRule> rules,
                       std::int64_t q);
Model piecewise_model(DiscreteDomain domain, std::vector<PiecewisePiece> pieces,
                      OutputValue fallback);
Model restrict_model(const Model& inner, Box box, OutputValue outside);
Model oracle_injective_model(DiscreteDomain domain);

/// Proven upper bound on the size of a model's reachable output set, valid on
/// every extension of the domain. Absent for kinds with unbounded range.
struct RangeBound {
    BigInt bound;
    std::string justification;
};
std::optional<RangeBound> finite_range_bound(const Model& model);

/// Exact reachable set when the domain is enumerable within budget, otherwise
/// the symbolic bound. Throws budget_exceeded when neither applies.
struct RangeResult {
    std::optional<std::set<OutputValue>> exact;
    std::optional<RangeBound> bound;
};
RangeResult range_of(const Model& model, const DiscreteDomain& domain, std::uint64_t budget);

} // namespace sstar

#endif
