#include "sstar/model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace sstar {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
    fail(ErrorCode::parse_error, path + ": " + msg);
}

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object()) bad(path, "expected an object");
    for (const auto& [key, v] : obj.items()) {
        (void)v;
        if (!allowed.count(key)) bad(path + "." + key, "unknown field");
    }
}

const json& get(const json& obj, const std::string& path, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) bad(path + "." + key, "missing required field");
    return *it;
}

std::int64_t parse_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) bad(path, "expected an integer");
    return v.get<std::int64_t>();
}

Point parse_point(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) bad(path, "expected a non-empty coordinate array");
    Point p;
    for (std::size_t i = 0; i < v.size(); ++i)
        p.coords.push_back(parse_int(v[i], path + "[" + std::to_string(i) + "]"));
    return p;
}

json point_to_json(const Point& p) {
    json a = json::array();
    for (auto c : p.coords) a.push_back(c);
    return a;
}

OutputValue parse_value(const json& v, const std::string& path) {
    if (v.is_string()) {
        Rational r = parse_rational(v.get<std::string>(), path);
        return OutputValue::rational(r);
    }
    if (v.is_object()) {
        if (v.contains("atom")) {
            require_keys(v, path, {"atom"});
            const json& a = get(v, path, "atom");
            if (!a.is_string()) bad(path + ".atom", "expected a string");
            return OutputValue::atom(a.get<std::string>());
        }
        if (v.contains("score") || v.contains("indicator")) {
            require_keys(v, path, {"score", "indicator"});
            const json& s = get(v, path, "score");
            const json& ind = get(v, path, "indicator");
            if (!s.is_string()) bad(path + ".score", "expected a rational string");
            if (!ind.is_string()) bad(path + ".indicator", "expected a string");
            return OutputValue::score_pair(parse_rational(s.get<std::string>(), path + ".score"),
                                           ind.get<std::string>());
        }
    }
    bad(path, "expected a rational string, {\"atom\": ...} or {\"score\", \"indicator\"}");
}

json value_to_json(const OutputValue& v) {
    if (v.is_numeric()) return v.str();
    if (v.is_atom()) return json{{"atom", v.as_atom().name}};
    const auto& p = v.as_pair();
    return json{{"score", rational_str(p.score)}, {"indicator", p.indicator}};
}

Box parse_box(const json& v, const std::string& path) {
    require_keys(v, path, {"lo", "hi"});
    return Box{parse_point(get(v, path, "lo"), path + ".lo"),
               parse_point(get(v, path, "hi"), path + ".hi")};
}

json box_to_json(const Box& b) {
    return json{{"lo", point_to_json(b.lo)}, {"hi", point_to_json(b.hi)}};
}

Model parse_model(const json& v, const DiscreteDomain& domain, const std::string& path);

Model parse_model_kind(const json& v, const DiscreteDomain& domain, const std::string& path,
                       const std::string& kind) {
    if (kind == "table") {
        require_keys(v, path, {"kind", "entries", "default"});
        const json& entries = get(v, path, "entries");
        if (!entries.is_array()) bad(path + ".entries", "expected an array");
        std::map<Point, OutputValue> map;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            std::string epath = path + ".entries[" + std::to_string(i) + "]";
            require_keys(entries[i], epath, {"point", "value"});
            Point p = parse_point(get(entries[i], epath, "point"), epath + ".point");
            OutputValue val = parse_value(get(entries[i], epath, "value"), epath + ".value");
            if (!map.emplace(std::move(p), std::move(val)).second)
                bad(epath + ".point", "duplicate entry point");
        }
        return lookup_table_model(domain, std::move(map),
                                  parse_value(get(v, path, "default"), path + ".default"));
    }
    if (kind == "affine") {
        require_keys(v, path, {"kind", "weights", "bias"});
        const json& ws = get(v, path, "weights");
        if (!ws.is_array()) bad(path + ".weights", "expected an array of rational strings");
        if (ws.size() != domain.dims())
            bad(path + ".weights", "expected " + std::to_string(domain.dims()) +
                                       " weights for this domain, got " +
                                       std::to_string(ws.size()));
        std::vector<Rational> weights;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            std::string wpath = path + ".weights[" + std::to_string(i) + "]";
            if (!ws[i].is_string()) bad(wpath, "expected a rational string");
            weights.push_back(parse_rational(ws[i].get<std::string>(), wpath));
        }
        const json& b = get(v, path, "bias");
        if (!b.is_string()) bad(path + ".bias", "expected a rational string");
        return affine_model(domain, std::move(weights),
                            parse_rational(b.get<std::string>(), path + ".bias"));
    }
    if (kind == "classifier") {
        require_keys(v, path, {"kind", "rules", "q"});
        const json& rules = get(v, path, "rules");
        if (!rules.is_array()) bad(path + ".rules", "expected an array");
        std::vector<ClassifierRule> parsed;
        for (std::size_t i = 0; i < rules.size(); ++i) {
            std::string rpath = path + ".rules[" + std::to_string(i) + "]";
            require_keys(rules[i], rpath, {"indicator", "anchor", "slope"});
            const json& ind = get(rules[i], rpath, "indicator");
            const json& slope = get(rules[i], rpath, "slope");
            if (!ind.is_string()) bad(rpath + ".indicator", "expected a string");
            if (!slope.is_string()) bad(rpath + ".slope", "expected a rational string");
            parsed.push_back(ClassifierRule{
                ind.get<std::string>(),
                parse_point(get(rules[i], rpath, "anchor"), rpath + ".anchor"),
                parse_rational(slope.get<std::string>(), rpath + ".slope")});
        }
        return classifier_model(domain, std::move(parsed),
                                parse_int(get(v, path, "q"), path + ".q"));
    }
    if (kind == "piecewise") {
        require_keys(v, path, {"kind", "pieces", "fallback"});
        const json& pieces = get(v, path, "pieces");
        if (!pieces.is_array()) bad(path + ".pieces", "expected an array");
        std::vector<PiecewisePiece> parsed;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            std::string ppath = path + ".pieces[" + std::to_string(i) + "]";
            require_keys(pieces[i], ppath, {"box", "model"});
            Box box = parse_box(get(pieces[i], ppath, "box"), ppath + ".box");
            Model sub = parse_model(get(pieces[i], ppath, "model"), domain, ppath + ".model");
            parsed.push_back(PiecewisePiece{std::move(box),
                                            std::make_shared<Model>(std::move(sub))});
        }
        return piecewise_model(domain, std::move(parsed),
                               parse_value(get(v, path, "fallback"), path + ".fallback"));
    }
    if (kind == "restricted") {
        require_keys(v, path, {"kind", "box", "inner", "outside"});
        Model inner = parse_model(get(v, path, "inner"), domain, path + ".inner");
        return restrict_model(inner, parse_box(get(v, path, "box"), path + ".box"),
                              parse_value(get(v, path, "outside"), path + ".outside"));
    }
    if (kind == "oracle-injective") {
        require_keys(v, path, {"kind"});
        return oracle_injective_model(domain);
    }
    bad(path + ".kind", "unknown model kind \"" + kind + "\"");
}

Model parse_model(const json& v, const DiscreteDomain& domain, const std::string& path) {
    if (!v.is_object()) bad(path, "expected an object");
    const json& kind = get(v, path, "kind");
    if (!kind.is_string()) bad(path + ".kind", "expected a string");
    try {
        return parse_model_kind(v, domain, path, kind.get<std::string>());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::parse_error) throw;
        bad(path, e.what());
    }
}

json model_to_json(const Model& model) {
    json out;
    out["kind"] = kind_name(model.kind());
    switch (model.kind()) {
    case ModelKind::table: {
        const auto& t = model.payload_as<TablePayload>();
        json entries = json::array();
        for (const auto& [p, v] : t.entries)
            entries.push_back(json{{"point", point_to_json(p)}, {"value", value_to_json(v)}});
        out["entries"] = std::move(entries);
        out["default"] = value_to_json(t.default_value);
        break;
    }
    case ModelKind::affine: {
        const auto& a = model.payload_as<AffinePayload>();
        json ws = json::array();
        for (const auto& w : a.weights) ws.push_back(rational_str(w));
        out["weights"] = std::move(ws);
        out["bias"] = rational_str(a.bias);
        break;
    }
    case ModelKind::classifier: {
        const auto& c = model.payload_as<ClassifierPayload>();
        json rules = json::array();
        for (const auto& r : c.rules)
            rules.push_back(json{{"indicator", r.indicator},
                                 {"anchor", point_to_json(r.anchor)},
                                 {"slope", rational_str(r.slope)}});
        out["rules"] = std::move(rules);
        out["q"] = c.q;
        break;
    }
    case ModelKind::piecewise: {
        const auto& pw = model.payload_as<PiecewisePayload>();
        json pieces = json::array();
        for (const auto& piece : pw.pieces)
            pieces.push_back(json{{"box", box_to_json(piece.box)},
                                  {"model", model_to_json(*piece.model)}});
        out["pieces"] = std::move(pieces);
        out["fallback"] = value_to_json(pw.fallback);
        break;
    }
    case ModelKind::restricted: {
        const auto& r = model.payload_as<RestrictedPayload>();
        out["box"] = box_to_json(r.box);
        out["inner"] = model_to_json(*r.inner);
        out["outside"] = value_to_json(r.outside);
        break;
    }
    case ModelKind::oracle_injective:
        break;
    }
    return out;
}

} // namespace

Rational parse_rational(const std::string& text, const std::string& path) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) bad(path, "\"" + text + "\" is not an integer or \"p/q\" rational");
        return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.empty() || den[0] == '-')
        bad(path, "\"" + text + "\" is not a valid \"p/q\" rational");
    BigInt n(num), d(den);
    if (d == 0) bad(path, "zero denominator in \"" + text + "\"");
    Rational r(n, d);
    if (boost::multiprecision::numerator(r) != n || boost::multiprecision::denominator(r) != d)
        bad(path, "\"" + text + "\" is not in lowest terms; write \"" +
                      OutputValue::rational(r).str() + "\"");
    return r;
}

std::string rational_str(const Rational& r) { return OutputValue::rational(r).str(); }

ModelSpecDocument parse_model_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::parse_error, std::string("syntax error: ") + e.what());
    }
    require_keys(doc, "$", {"domain", "model", "check"});

    const json& dom = get(doc, "$", "domain");
    require_keys(dom, "$.domain", {"scales", "labels"});
    const json& scales_json = get(dom, "$.domain", "scales");
    if (!scales_json.is_array() || scales_json.empty())
        bad("$.domain.scales", "expected a non-empty array of positive integers");
    std::vector<std::int64_t> scales;
    for (std::size_t i = 0; i < scales_json.size(); ++i)
        scales.push_back(parse_int(scales_json[i], "$.domain.scales[" + std::to_string(i) + "]"));
    std::vector<std::string> labels;
    if (dom.contains("labels")) {
        const json& ls = dom["labels"];
        if (!ls.is_array()) bad("$.domain.labels", "expected an array of strings");
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (!ls[i].is_string())
                bad("$.domain.labels[" + std::to_string(i) + "]", "expected a string");
            labels.push_back(ls[i].get<std::string>());
        }
    }
    DiscreteDomain domain = [&] {
        try {
            return make_domain(scales, labels);
        } catch (const Error& e) {
            bad("$.domain", e.what());
        }
    }();

    Model model = parse_model(get(doc, "$", "model"), domain, "$.model");

    CheckOptions check;
    if (doc.contains("check")) {
        const json& c = doc["check"];
        require_keys(c, "$.check",
                     {"reading", "policy", "schedule", "seed", "budget", "sample_budget"});
        if (c.contains("reading")) {
            if (!c["reading"].is_string()) bad("$.check.reading", "expected a string");
            check.reading = reading_from_name(c["reading"].get<std::string>());
            if (!check.reading)
                bad("$.check.reading", "expected \"literal\" or \"noncontainment\"");
        }
        if (c.contains("policy")) {
            if (!c["policy"].is_string()) bad("$.check.policy", "expected a string");
            check.policy = policy_from_name(c["policy"].get<std::string>());
            if (!check.policy)
                bad("$.check.policy", "expected \"allow-empty\" or \"nonempty-proper\"");
        }
        if (c.contains("schedule")) {
            if (!c["schedule"].is_array()) bad("$.check.schedule", "expected an array");
            std::vector<std::int64_t> sched;
            for (std::size_t i = 0; i < c["schedule"].size(); ++i)
                sched.push_back(
                    parse_int(c["schedule"][i], "$.check.schedule[" + std::to_string(i) + "]"));
            check.schedule = std::move(sched);
        }
        if (c.contains("seed")) check.seed = parse_int(c["seed"], "$.check.seed");
        if (c.contains("budget")) check.budget = parse_int(c["budget"], "$.check.budget");
        if (c.contains("sample_budget"))
            check.sample_budget = parse_int(c["sample_budget"], "$.check.sample_budget");
    }

    return ModelSpecDocument{std::move(domain), std::move(model), std::move(check)};
}

std::string serialize_model_document(const ModelSpecDocument& doc) {
    json out;
    json dom;
    json scales = json::array();
    for (auto s : doc.domain.scales()) scales.push_back(s);
    dom["scales"] = std::move(scales);
    if (!doc.domain.labels().empty()) dom["labels"] = doc.domain.labels();
    out["domain"] = std::move(dom);
    out["model"] = model_to_json(doc.model);

    json check = json::object();
    if (doc.check.reading) check["reading"] = reading_name(*doc.check.reading);
    if (doc.check.policy) check["policy"] = policy_name(*doc.check.policy);
    if (doc.check.schedule) check["schedule"] = *doc.check.schedule;
    if (doc.check.seed) check["seed"] = *doc.check.seed;
    if (doc.check.budget) check["budget"] = *doc.check.budget;
    if (doc.check.sample_budget) check["sample_budget"] = *doc.check.sample_budget;
    if (!check.empty()) out["check"] = std::move(check);

    return out.dump(2) + "\n";
}

} // namespace sstar
