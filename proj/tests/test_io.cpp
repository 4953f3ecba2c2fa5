#include "sstar/model_io.hpp"
#include "sstar/report_io.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sstar;
using namespace sstar::test;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string message_of(std::function<void()> f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("parse a minimal affine document") {
    auto doc = parse_model_document(R"({
      "domain": { "scales": [10] },
      "model": { "kind": "affine", "weights": ["2"], "bias": "0" }
    })");
    CHECK(doc.domain.scales() == std::vector<std::int64_t>{10});
    CHECK(doc.model.eval(pt({3})) == iv(6));
    CHECK_FALSE(doc.check.reading);
    CHECK_FALSE(doc.check.schedule);
}

TEST_CASE("check block round-trips") {
    auto doc = parse_model_document(R"({
      "domain": { "scales": [4, 4] },
      "model": { "kind": "oracle-injective" },
      "check": { "reading": "noncontainment", "policy": "nonempty-proper",
                 "schedule": [2, 4, 8], "seed": 42, "sample_budget": 100 }
    })");
    CHECK(doc.check.reading == Reading::noncontainment);
    CHECK(doc.check.policy == SubsetPolicy::nonempty_proper);
    CHECK(doc.check.schedule == std::vector<std::int64_t>{2, 4, 8});
    CHECK(doc.check.seed == 42);
    CHECK(doc.check.sample_budget == 100);

    auto again = parse_model_document(serialize_model_document(doc));
    CHECK(serialize_model_document(again) == serialize_model_document(doc));
}

TEST_CASE("diagnostics name the offending path") {
    auto wrong_arity = message_of([] {
        parse_model_document(R"({
          "domain": { "scales": [3, 3] },
          "model": { "kind": "affine", "weights": ["1"], "bias": "0" }
        })");
    });
    CHECK(wrong_arity.find("$.model.weights") != std::string::npos);
    CHECK(wrong_arity.find("expected 2") != std::string::npos);

    auto unknown = message_of([] {
        parse_model_document(R"({
          "domain": { "scales": [3] },
          "model": { "kind": "affine", "weights": ["1"], "bias": "0", "extra": 1 }
        })");
    });
    CHECK(unknown.find("$.model.extra") != std::string::npos);
    CHECK(unknown.find("unknown field") != std::string::npos);

    auto bad_kind = message_of([] {
        parse_model_document(R"({
          "domain": { "scales": [3] },
          "model": { "kind": "quadratic" }
        })");
    });
    CHECK(bad_kind.find("$.model.kind") != std::string::npos);

    auto bad_entry = message_of([] {
        parse_model_document(R"({
          "domain": { "scales": [3] },
          "model": { "kind": "table",
                     "entries": [ { "point": [9], "value": "1" } ],
                     "default": "0" }
        })");
    });
    CHECK(bad_entry.find("$.model") != std::string::npos);
}

TEST_CASE("rationals must be canonical") {
    CHECK(parse_rational("2", "$") == Rational(2));
    CHECK(parse_rational("-7/5", "$") == Rational(-7, 5));

    auto hint = message_of([] { parse_rational("2/4", "$.model.bias"); });
    CHECK(hint.find("$.model.bias") != std::string::npos);
    CHECK(hint.find("\"1/2\"") != std::string::npos);

    CHECK(code_of([] { parse_rational("1/0", "$"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { parse_rational("1.5", "$"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { parse_rational("1/-2", "$"); }) == ErrorCode::parse_error);

    CHECK(rational_str(Rational(4, 2)) == "2");
    CHECK(rational_str(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("serialization is stable over the bundled corpus") {
    std::filesystem::path dir(SSTAR_MODELS_DIR);
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        ++seen;
        auto text = slurp(entry.path());
        auto doc = parse_model_document(text);
        auto canon = serialize_model_document(doc);
        auto doc2 = parse_model_document(canon);
        CHECK(serialize_model_document(doc2) == canon);
        // same evaluations after the round trip
        for (const auto& p : enumerate_points(doc.domain, 1 << 12))
            CHECK(doc.model.eval(p) == doc2.model.eval(p));
    }
    CHECK(seen >= 5);
}

TEST_CASE("input digest is a stable 16-hex fingerprint") {
    auto d1 = fnv1a64_hex("hello");
    CHECK(d1.size() == 16);
    CHECK(d1 == fnv1a64_hex("hello"));
    CHECK(d1 != fnv1a64_hex("hello "));
    CHECK(fnv1a64_hex("") != fnv1a64_hex("0"));
    for (char c : d1) CHECK(std::isxdigit(static_cast<unsigned char>(c)));
}

TEST_CASE("machine reports carry a versioned envelope") {
    auto env = report_envelope("check", fnv1a64_hex("x"), nlohmann::json{{"verdict", "pass"}});
    CHECK(env.at("tool_version") == kToolVersion);
    CHECK(env.at("subcommand") == "check");
    CHECK(env.at("input_digest") == fnv1a64_hex("x"));
    CHECK(env.at("report").at("verdict") == "pass");

    auto a = render_machine(env);
    CHECK(a == render_machine(env));
    CHECK(a.back() == '\n');
}
