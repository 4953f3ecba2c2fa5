#include "sstar/analysis.hpp"
#include "sstar/condition.hpp"
#include "sstar/fibers.hpp"
#include "sstar/model_io.hpp"
#include "sstar/report_io.hpp"
#include "sstar/star.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace sstar;
using nlohmann::json;

struct CommonFlags {
    bool machine = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> sample_budget;
    std::optional<std::string> schedule;
    std::optional<std::string> reading;
    std::optional<std::string> policy;
    std::optional<std::string> expect;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_flag("--json", f.machine, "emit the machine-readable report");
    cmd->add_option("--seed", f.seed, "seed for randomized search paths");
    cmd->add_option("--budget", f.budget, "point budget for enumeration");
    cmd->add_option("--sample-budget", f.sample_budget, "sample budget for collision search");
    cmd->add_option("--schedule", f.schedule,
                    "comma-separated extension multipliers (default 2,4,...,256)");
    cmd->add_option("--reading", f.reading, "condition reading: literal | noncontainment");
    cmd->add_option("--policy", f.policy, "subset policy: allow-empty | nonempty-proper");
    cmd->add_option("--expect", f.expect, "expected verdict; mismatch exits 1");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::parse_error, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::int64_t> parse_schedule(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (...) {
            fail(ErrorCode::invalid_schedule, "bad schedule entry \"" + item + "\"");
        }
    }
    if (out.empty()) fail(ErrorCode::invalid_schedule, "empty schedule");
    return out;
}

std::set<Point> parse_point_list(const std::string& text, const std::string& what) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::parse_error, what + ": " + e.what());
    }
    if (!j.is_array()) fail(ErrorCode::parse_error, what + ": expected an array of points");
    std::set<Point> out;
    for (const auto& pt : j) {
        if (!pt.is_array()) fail(ErrorCode::parse_error, what + ": expected coordinate arrays");
        Point p;
        for (const auto& c : pt) {
            if (!c.is_number_integer())
                fail(ErrorCode::parse_error, what + ": expected integer coordinates");
            p.coords.push_back(c.get<std::int64_t>());
        }
        out.insert(std::move(p));
    }
    return out;
}

struct Resolved {
    Reading reading = Reading::noncontainment;
    SubsetPolicy policy = SubsetPolicy::nonempty_proper;
    std::uint64_t seed = 0;
    std::uint64_t sample_budget = 4096;
    std::vector<std::int64_t> schedule = default_schedule_multipliers();
    std::optional<std::uint64_t> budget;
};

// precedence: command-line flag, then the file's check block, then defaults
Resolved resolve(const CommonFlags& f, const CheckOptions& file) {
    Resolved r;
    if (file.reading) r.reading = *file.reading;
    if (file.policy) r.policy = *file.policy;
    if (file.seed) r.seed = *file.seed;
    if (file.sample_budget) r.sample_budget = *file.sample_budget;
    if (file.schedule) r.schedule = *file.schedule;
    if (file.budget) r.budget = *file.budget;
    if (f.reading) {
        auto v = reading_from_name(*f.reading);
        if (!v) fail(ErrorCode::parse_error, "unknown reading \"" + *f.reading + "\"");
        r.reading = *v;
    }
    if (f.policy) {
        auto v = policy_from_name(*f.policy);
        if (!v) fail(ErrorCode::parse_error, "unknown policy \"" + *f.policy + "\"");
        r.policy = *v;
    }
    if (f.seed) r.seed = *f.seed;
    if (f.sample_budget) r.sample_budget = *f.sample_budget;
    if (f.schedule) r.schedule = parse_schedule(*f.schedule);
    if (f.budget) r.budget = *f.budget;
    return r;
}

int emit(const CommonFlags& f, const std::string& subcommand, const std::string& digest,
         const json& body, const std::string& human, std::optional<bool> expect_ok) {
    if (f.machine)
        std::cout << render_machine(report_envelope(subcommand, digest, body));
    else
        std::cout << human;
    if (expect_ok && !*expect_ok) return 1;
    return 0;
}

int run_check(const std::string& path, const CommonFlags& flags) {
    std::string text = read_file(path);
    auto doc = parse_model_document(text);
    Resolved opt = resolve(flags, doc.check);

    ConditionReport report;
    if (opt.reading == Reading::noncontainment && opt.policy == SubsetPolicy::nonempty_proper &&
        !flags.reading && !flags.policy && !doc.check.reading && !doc.check.policy) {
        report = check_s_fast(doc.model, doc.domain, opt.budget.value_or(1'000'000));
    } else {
        // brute-force quantifier evaluation; kept small by design
        std::uint64_t budget =
            opt.budget.value_or(opt.reading == Reading::literal ? 12 : 16);
        report = check_s_bruteforce(doc.model, doc.domain, opt.reading, opt.policy, budget);
    }

    std::optional<bool> expect_ok;
    if (flags.expect) {
        std::string got = report.verdict == Verdict::pass ? "pass" : "fail";
        expect_ok = got == *flags.expect;
        if (!*expect_ok)
            std::cerr << "expected verdict " << *flags.expect << ", got " << got << "\n";
    }
    return emit(flags, "check", fnv1a64_hex(text), condition_report_json(report),
                condition_report_text(report), expect_ok);
}

int run_classify(const std::string& path, const CommonFlags& flags) {
    std::string text = read_file(path);
    auto doc = parse_model_document(text);
    Resolved opt = resolve(flags, doc.check);

    StarReport report = classify(doc.model, doc.domain, opt.schedule, opt.sample_budget, opt.seed);

    std::optional<bool> expect_ok;
    if (flags.expect) {
        auto want = overall_from_name(*flags.expect);
        if (!want) fail(ErrorCode::parse_error, "unknown verdict \"" + *flags.expect + "\"");
        expect_ok = report.overall == *want;
        if (!*expect_ok)
            std::cerr << "expected " << overall_name(*want) << ", got "
                      << overall_name(report.overall) << "\n";
    }
    return emit(flags, "classify", fnv1a64_hex(text), star_report_json(report),
                star_report_text(report), expect_ok);
}

int run_generators(const std::string& path, const CommonFlags& flags) {
    std::string text = read_file(path);
    auto doc = parse_model_document(text);
    Resolved opt = resolve(flags, doc.check);

    auto points = enumerate_points(doc.domain, opt.budget.value_or(1'000'000));
    std::set<Point> subset(points.begin(), points.end());
    auto gens = fibers(doc.model, subset);
    return emit(flags, "generators", fnv1a64_hex(text), generators_json(gens),
                generators_text(gens), std::nullopt);
}

int run_jaccard(const std::string& truth_path, const std::string& guess_path,
                const CommonFlags& flags) {
    std::string truth_text = read_file(truth_path);
    std::string guess_text = read_file(guess_path);
    auto truth = parse_model_document(truth_text);
    auto guess = parse_model_document(guess_text);
    if (truth.domain.scales() != guess.domain.scales())
        fail(ErrorCode::domain_mismatch, "the two model files use different domains");
    Resolved opt = resolve(flags, truth.check);

    auto report = hypothesis_validity(truth.model, guess.model, truth.domain,
                                      opt.budget.value_or(1'000'000));
    return emit(flags, "jaccard", fnv1a64_hex(truth_text + guess_text),
                validity_report_json(report), validity_report_text(report), std::nullopt);
}

int run_compile(const std::string& path, const CommonFlags& flags,
                const std::string& out_path) {
    std::string text = read_file(path);
    auto doc = parse_model_document(text);
    Resolved opt = resolve(flags, doc.check);

    auto [table, proof] = compile_memory(doc.model, doc.domain, opt.budget.value_or(1'000'000));
    StarReport star = classify(table, doc.domain, opt.schedule, opt.sample_budget, opt.seed);

    if (!out_path.empty()) {
        ModelSpecDocument compiled{doc.domain, table, {}};
        std::ofstream out(out_path, std::ios::binary);
        if (!out) fail(ErrorCode::parse_error, "cannot write " + out_path);
        out << serialize_model_document(compiled);
    }

    json body;
    body["points_checked"] = proof.points_checked;
    body["all_agree"] = proof.all_agree;
    body["entries"] = table.payload_as<TablePayload>().entries.size();
    body["compiled_star"] = star_report_json(star);

    std::ostringstream human;
    human << "compiled " << table.payload_as<TablePayload>().entries.size()
          << " entries; pointwise agreement " << (proof.all_agree ? "100%" : "FAILED") << " ("
          << proof.points_checked << " points)\n";
    human << "compiled table under condition S*:\n" << star_report_text(star);
    return emit(flags, "compile", fnv1a64_hex(text), body, human.str(), std::nullopt);
}

int run_split(const std::string& path, const CommonFlags& flags, const std::string& part1_text,
              const std::string& part2_text) {
    std::string text = read_file(path);
    auto doc = parse_model_document(text);

    std::set<Point> part1 = parse_point_list(part1_text, "--part1");
    std::set<Point> part2 = parse_point_list(part2_text, "--part2");
    std::set<Point> subset = part1;
    subset.insert(part2.begin(), part2.end());

    auto report = split_experiment(doc.model, subset, part1, part2);
    return emit(flags, "split", fnv1a64_hex(text), split_report_json(report),
                split_report_text(report), std::nullopt);
}

int run_demo(const CommonFlags& flags) {
    Resolved opt = resolve(flags, {});

    // the four flavors of model the verifier distinguishes
    auto db_domain = make_domain({8});
    std::map<Point, OutputValue> entries{
        {Point{{0}}, OutputValue::atom("1977-03-04")},
        {Point{{1}}, OutputValue::atom("1985-11-21")},
    };
    Model database = lookup_table_model(db_domain, entries, OutputValue::null_atom());

    auto line_domain = make_domain({10});
    Model line = affine_model(line_domain, {Rational(2)}, Rational(0));

    auto image_domain = make_domain({10, 10});
    Model scorer = classifier_model(
        image_domain,
        {ClassifierRule{"cup", Point{{2, 2}}, Rational(1, 10)},
         ClassifierRule{"human", Point{{7, 7}}, Rational(1, 10)}},
        100);

    auto vision_domain = make_domain({4, 4});
    Model vision = oracle_injective_model(vision_domain);

    struct Row {
        const char* name;
        const Model* model;
        const DiscreteDomain* domain;
    };
    std::vector<Row> rows{{"A database", &database, &db_domain},
                          {"B linear", &line, &line_domain},
                          {"C classifier", &scorer, &image_domain},
                          {"D injective stand-in", &vision, &vision_domain}};

    json body = json::array();
    std::ostringstream human;
    for (const auto& row : rows) {
        StarReport report =
            classify(*row.model, *row.domain, opt.schedule, opt.sample_budget, opt.seed);
        human << row.name << ": " << overall_name(report.overall) << "\n";
        body.push_back(json{{"name", row.name}, {"classification", star_report_json(report)}});
    }
    return emit(flags, "demo", fnv1a64_hex("demo"), body, human.str(), std::nullopt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Condition S / S* verifier for finite models"};
    app.require_subcommand(1);

    CommonFlags f_check, f_classify, f_generators, f_jaccard, f_compile, f_split, f_demo;
    std::string in_path, second_path, out_path, part1_text, part2_text;

    auto* check = app.add_subcommand("check", "decide condition S on the model's domain");
    check->add_option("file", in_path, "model description file")->required();
    add_common(check, f_check);

    auto* classify_cmd = app.add_subcommand("classify", "decide condition S* on every dimension");
    classify_cmd->add_option("file", in_path, "model description file")->required();
    add_common(classify_cmd, f_classify);

    auto* generators = app.add_subcommand("generators", "list information generators (fibers)");
    generators->add_option("file", in_path, "model description file")->required();
    add_common(generators, f_generators);

    auto* jac = app.add_subcommand("jaccard", "hypothesis validity of one model against another");
    jac->add_option("true_file", in_path, "true model description file")->required();
    jac->add_option("guess_file", second_path, "hypothesis model description file")->required();
    add_common(jac, f_jaccard);

    auto* compile = app.add_subcommand("compile", "tabulate the model into a memory system");
    compile->add_option("file", in_path, "model description file")->required();
    compile->add_option("--out", out_path, "write the compiled table model here");
    add_common(compile, f_compile);

    auto* split = app.add_subcommand("split", "dataset separation/merge experiment");
    split->add_option("file", in_path, "model description file")->required();
    split->add_option("--part1", part1_text, "JSON array of points")->required();
    split->add_option("--part2", part2_text, "JSON array of points")->required();
    add_common(split, f_split);

    auto* demo = app.add_subcommand("demo", "classify the four bundled example models");
    add_common(demo, f_demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return run_check(in_path, f_check);
        if (*classify_cmd) return run_classify(in_path, f_classify);
        if (*generators) return run_generators(in_path, f_generators);
        if (*jac) return run_jaccard(in_path, second_path, f_jaccard);
        if (*compile) return run_compile(in_path, f_compile, out_path);
        if (*split) return run_split(in_path, f_split, part1_text, part2_text);
        if (*demo) return run_demo(f_demo);
    } catch (const sstar::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
