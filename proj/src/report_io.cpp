#include "sstar/report_io.hpp"

#include "sstar/model_io.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace sstar {

using nlohmann::json;

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

json point_json(const Point& p) {
    json a = json::array();
    for (auto c : p.coords) a.push_back(c);
    return a;
}

json value_json(const OutputValue& v) {
    if (v.is_numeric()) return v.str();
    if (v.is_atom()) return json{{"atom", v.as_atom().name}};
    const auto& p = v.as_pair();
    return json{{"score", OutputValue::rational(p.score).str()}, {"indicator", p.indicator}};
}

namespace {

std::string points_str(const std::set<Point>& pts) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& p : pts) {
        if (!first) os << ", ";
        os << p.str();
        first = false;
    }
    os << "}";
    return os.str();
}

json points_json(const std::set<Point>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(point_json(p));
    return a;
}

} // namespace

json condition_report_json(const ConditionReport& r) {
    json out;
    out["verdict"] = r.verdict == Verdict::pass ? "pass" : "fail";
    out["reading"] = reading_name(r.reading);
    out["policy"] = policy_name(r.policy);
    out["subsets_examined"] = r.subsets_examined;
    if (r.witness_failing_subset)
        out["witness_failing_subset"] = points_json(*r.witness_failing_subset);
    if (r.witness_collision)
        out["witness_collision"] = json::array({point_json(r.witness_collision->first),
                                                point_json(r.witness_collision->second)});
    return out;
}

std::string condition_report_text(const ConditionReport& r) {
    std::ostringstream os;
    os << "condition S (" << reading_name(r.reading) << ", " << policy_name(r.policy)
       << "): " << (r.verdict == Verdict::pass ? "PASS" : "FAIL") << "\n";
    if (r.witness_failing_subset)
        os << "witness X_S = " << points_str(*r.witness_failing_subset) << "\n";
    if (r.witness_collision)
        os << "collision " << r.witness_collision->first.str() << " ~ "
           << r.witness_collision->second.str() << "\n";
    os << "subsets examined: " << r.subsets_examined << "\n";
    return os.str();
}

std::string star_dim_line(const StarDimEntry& e) {
    std::ostringstream os;
    os << "dim " << e.dim << ": ";
    switch (e.verdict) {
    case DimVerdict::pass:
        os << "PASS (" << certificate_name(e.certificate) << ")";
        break;
    case DimVerdict::fail:
        os << "FAIL (";
        if (e.certificate == CertificateKind::pigeonhole) {
            os << "pigeonhole: range<=" << e.range_bound->str() << " < extension "
               << e.flagged_cardinality->str();
        } else {
            os << "collision-witness " << e.witness->a.str() << " ~ " << e.witness->b.str()
               << " -> " << e.witness->value.str();
        }
        os << ")";
        break;
    case DimVerdict::unknown:
        os << "UNKNOWN (" << certificate_name(e.certificate) << ")";
        break;
    }
    return os.str();
}

json star_report_json(const StarReport& r) {
    json dims = json::array();
    for (const auto& e : r.dims) {
        json d;
        d["dim"] = e.dim;
        d["verdict"] = dim_verdict_name(e.verdict);
        d["certificate"] = certificate_name(e.certificate);
        if (e.range_bound) {
            d["range_bound"] = e.range_bound->str();
            d["bound_justification"] = e.bound_justification;
        }
        if (e.flagged_scale) d["flagged_scale"] = *e.flagged_scale;
        if (e.flagged_cardinality) d["flagged_cardinality"] = e.flagged_cardinality->str();
        if (e.witness) {
            d["witness"] = json{{"a", point_json(e.witness->a)},
                                {"b", point_json(e.witness->b)},
                                {"value", value_json(e.witness->value)},
                                {"required_scale", e.witness->required_scale}};
        }
        if (!e.note.empty()) d["note"] = e.note;
        dims.push_back(std::move(d));
    }
    json out;
    out["dimensions"] = std::move(dims);
    out["overall"] = overall_name(r.overall);
    out["schedule_multipliers"] = r.schedule_multipliers;
    out["sample_budget"] = r.sample_budget;
    out["seed"] = r.seed;
    return out;
}

std::string star_report_text(const StarReport& r) {
    std::ostringstream os;
    for (const auto& e : r.dims) os << star_dim_line(e) << "\n";
    os << "overall: " << overall_name(r.overall) << "\n";
    return os.str();
}

json validity_report_json(const ValidityReport& r) {
    json blocks = json::array();
    for (const auto& b : r.blocks) {
        json values = json::array();
        for (const auto& v : b.block) values.push_back(value_json(v));
        blocks.push_back(json{{"block", std::move(values)},
                              {"true_preimage", points_json(b.true_preimage)},
                              {"guess_preimage", points_json(b.guess_preimage)},
                              {"jaccard", rational_str(b.similarity)}});
    }
    json out;
    out["blocks"] = std::move(blocks);
    out["mean"] = rational_str(r.mean);
    return out;
}

std::string validity_report_text(const ValidityReport& r) {
    std::ostringstream os;
    for (const auto& b : r.blocks) {
        os << "block {";
        for (std::size_t i = 0; i < b.block.size(); ++i)
            os << (i ? ", " : "") << b.block[i].str();
        os << "}: J = " << rational_str(b.similarity) << "  (|T| = " << b.true_preimage.size()
           << ", |G| = " << b.guess_preimage.size() << ")\n";
    }
    os << "mean validity: " << rational_str(r.mean) << "\n";
    return os.str();
}

json generators_json(const std::vector<InformationGenerator>& gens) {
    json out = json::array();
    for (const auto& g : gens)
        out.push_back(json{{"representation", value_json(g.representation)},
                           {"fiber", points_json(g.fiber)},
                           {"invariant", g.invariant_flag}});
    return out;
}

std::string generators_text(const std::vector<InformationGenerator>& gens) {
    std::ostringstream os;
    for (const auto& g : gens)
        os << g.representation.str() << " <- " << points_str(g.fiber)
           << (g.invariant_flag ? "  [invariant]" : "") << "\n";
    os << gens.size() << " generator(s)\n";
    return os.str();
}

json split_report_json(const SplitMergeReport& r) {
    json out;
    out["part1"] = generators_json(r.part1_generators);
    out["part2"] = generators_json(r.part2_generators);
    out["union"] = generators_json(r.union_generators);
    out["merged"] = generators_json(r.merged_generators);
    return out;
}

std::string split_report_text(const SplitMergeReport& r) {
    std::ostringstream os;
    os << "part 1: " << r.part1_generators.size() << " generator(s)\n";
    os << "part 2: " << r.part2_generators.size() << " generator(s)\n";
    os << "union:  " << r.union_generators.size() << " generator(s)\n";
    os << "merged generators (" << r.merged_generators.size() << "):\n";
    for (const auto& g : r.merged_generators)
        os << "  " << g.representation.str() << " <- " << points_str(g.fiber) << "\n";
    return os.str();
}

json report_envelope(const std::string& subcommand, const std::string& input_digest,
                     json body) {
    json out;
    out["tool"] = "sstar";
    out["tool_version"] = kToolVersion;
    out["subcommand"] = subcommand;
    out["input_digest"] = input_digest;
    out["report"] = std::move(body);
    return out;
}

std::string render_machine(const json& report) { return report.dump(2) + "\n"; }

} // namespace sstar
