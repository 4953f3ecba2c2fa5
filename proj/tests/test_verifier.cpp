#include "sstar/condition.hpp"
#include "sstar/report_io.hpp"
#include "sstar/star.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace sstar;
using namespace sstar::test;

namespace {

Model table_10_default0() {
    return lookup_table_model(make_domain({5}), {{pt({0}), iv(10)}}, iv(0));
}

} // namespace

TEST_CASE("literal reading degenerates") {
    Model m = table_10_default0();
    auto d = m.domain();

    auto fail_empty = check_s_bruteforce(m, d, Reading::literal, SubsetPolicy::allow_empty, 16);
    CHECK(fail_empty.verdict == Verdict::fail);
    REQUIRE(fail_empty.witness_failing_subset);
    CHECK(fail_empty.witness_failing_subset->empty());

    auto pass = check_s_bruteforce(m, d, Reading::literal, SubsetPolicy::nonempty_proper, 16);
    CHECK(pass.verdict == Verdict::pass);

    // exhaustive over all table models [4] -> 2 values
    for (const auto& t : all_table_models(make_domain({4}), {iv(0), iv(1)})) {
        auto r1 = check_s_bruteforce(t, t.domain(), Reading::literal,
                                     SubsetPolicy::allow_empty, 16);
        CHECK(r1.verdict == Verdict::fail);
        CHECK(r1.witness_failing_subset->empty());
        auto r2 = check_s_bruteforce(t, t.domain(), Reading::literal,
                                     SubsetPolicy::nonempty_proper, 16);
        CHECK(r2.verdict == Verdict::pass);
    }
}

TEST_CASE("noncontainment brute force") {
    Model inj = affine_model(make_domain({5}), {Rational(2)}, Rational(0));
    auto r = check_s_bruteforce(inj, inj.domain(), Reading::noncontainment,
                                SubsetPolicy::nonempty_proper, 16);
    CHECK(r.verdict == Verdict::pass);

    Model tab = table_10_default0();
    auto rf = check_s_bruteforce(tab, tab.domain(), Reading::noncontainment,
                                 SubsetPolicy::nonempty_proper, 16);
    CHECK(rf.verdict == Verdict::fail);
    REQUIRE(rf.witness_failing_subset);
    // the witness subset genuinely fails: every complement value is already seen
    std::set<OutputValue> ys;
    for (const auto& p : *rf.witness_failing_subset) ys.insert(tab.eval(p));
    for (const auto& p : enumerate_points(tab.domain(), 16))
        if (!rf.witness_failing_subset->count(p)) CHECK(ys.count(tab.eval(p)) == 1);

    CHECK(code_of([&] {
              check_s_bruteforce(tab, make_domain({100}), Reading::noncontainment,
                                 SubsetPolicy::nonempty_proper, 16);
          }) == ErrorCode::budget_exceeded);
}

TEST_CASE("check_s_fast detects injectivity") {
    Model enc = affine_model(make_domain({3, 3}), {Rational(1), Rational(3)}, Rational(0));
    CHECK(check_s_fast(enc, enc.domain(), 1000).verdict == Verdict::pass);

    Model sum = affine_model(make_domain({2, 2}), {Rational(1), Rational(1)}, Rational(0));
    auto r = check_s_fast(sum, sum.domain(), 1000);
    CHECK(r.verdict == Verdict::fail);
    REQUIRE(r.witness_collision);
    CHECK(r.witness_collision->first == pt({0, 1}));
    CHECK(r.witness_collision->second == pt({1, 0}));
    REQUIRE(r.witness_failing_subset);
    CHECK(r.witness_failing_subset->size() == 3);
    CHECK_FALSE(r.witness_failing_subset->count(pt({0, 1})));

    Model tab = table_10_default0();
    CHECK(check_s_fast(tab, tab.domain(), 1000).verdict == Verdict::fail);
}

TEST_CASE("check_s_fast symbolic paths on huge domains") {
    // table defaults collide without enumerating the domain
    auto big = make_domain({1000, 1000, 1000});
    Model tab = lookup_table_model(big, {{pt({0, 0, 0}), iv(1)}}, OutputValue::null_atom());
    auto r = check_s_fast(tab, big, 100);
    CHECK(r.verdict == Verdict::fail);
    REQUIRE(r.witness_collision);
    CHECK(tab.eval(r.witness_collision->first) == tab.eval(r.witness_collision->second));

    // affine symbolic collision analysis
    Model inj = affine_model(big, {Rational(1), Rational(1000), Rational(1000000)}, Rational(0));
    CHECK(check_s_fast(inj, big, 100).verdict == Verdict::pass);
    Model col = affine_model(big, {Rational(1), Rational(1), Rational(2)}, Rational(0));
    auto rc = check_s_fast(col, big, 100);
    CHECK(rc.verdict == Verdict::fail);
    REQUIRE(rc.witness_collision);
    CHECK(col.eval(rc.witness_collision->first) == col.eval(rc.witness_collision->second));

    CHECK(check_s_fast(oracle_injective_model(big), big, 100).verdict == Verdict::pass);
}

TEST_CASE("oracle equivalence on random tables") {
    std::mt19937_64 rng(3);
    auto d = make_domain({2, 2, 2});
    std::vector<OutputValue> pool{iv(0), iv(1), iv(2), OutputValue::atom("x")};
    for (int trial = 0; trial < 100; ++trial) {
        Model m = random_table_model(d, pool, rng);
        auto brute = check_s_bruteforce(m, d, Reading::noncontainment,
                                        SubsetPolicy::nonempty_proper, 16);
        auto fast = check_s_fast(m, d, 1000);
        CHECK(brute.verdict == fast.verdict);
    }
}

TEST_CASE("find_collision") {
    Model sum = affine_model(make_domain({2, 2}), {Rational(1), Rational(1)}, Rational(0));
    auto c = find_collision(sum, sum.domain(), 1000, 0);
    REQUIRE(c);
    CHECK(c->first == pt({0, 1}));
    CHECK(c->second == pt({1, 0}));

    Model inj = affine_model(make_domain({10}), {Rational(2)}, Rational(0));
    CHECK_FALSE(find_collision(inj, inj.domain(), 1000, 0));

    Model tab = lookup_table_model(make_domain({5}), {{pt({0}), iv(1)}, {pt({1}), iv(2)}},
                                   OutputValue::null_atom());
    auto t = find_collision(tab, tab.domain(), 1000, 0);
    REQUIRE(t);
    CHECK(t->first == pt({2}));
    CHECK(t->second == pt({3}));

    // random probing on a non-enumerable domain still verifies its witness
    auto big = make_domain({100000, 100000});
    Model mod = lookup_table_model(big, {}, iv(7));
    auto r = find_collision(mod, big, 500, 42);
    REQUIRE(r);
    CHECK(mod.eval(r->first) == mod.eval(r->second));
    CHECK(r->first < r->second);
}

TEST_CASE("check_s_star per dimension") {
    Model enc = affine_model(make_domain({3, 3}), {Rational(1), Rational(3)}, Rational(0));
    std::vector<std::int64_t> schedule{6, 12, 24};

    auto dim0 = check_s_star(enc, enc.domain(), 0, schedule, 256, 0);
    CHECK(dim0.verdict == DimVerdict::fail);
    CHECK(dim0.certificate == CertificateKind::collision_witness);
    REQUIRE(dim0.witness);
    CHECK(dim0.witness->a == pt({3, 0}));
    CHECK(dim0.witness->b == pt({0, 1}));
    CHECK(dim0.witness->value == iv(3));
    CHECK(enc.eval(dim0.witness->a) == enc.eval(dim0.witness->b));

    auto dim1 = check_s_star(enc, enc.domain(), 1, schedule, 256, 0);
    CHECK(dim1.verdict == DimVerdict::pass);
    CHECK(dim1.certificate == CertificateKind::symbolic_injective);

    Model line = affine_model(make_domain({10}), {Rational(2)}, Rational(0));
    auto d0 = check_s_star(line, line.domain(), 0, {20, 40}, 256, 0);
    CHECK(d0.verdict == DimVerdict::pass);

    auto cdom = make_domain({10, 10});
    Model scorer = classifier_model(cdom, {ClassifierRule{"a", pt({0, 0}), Rational(1, 5)},
                                           ClassifierRule{"b", pt({9, 9}), Rational(1, 5)}},
                                    100);
    auto pig = check_s_star(scorer, cdom, 0, {20, 40, 80}, 4096, 0);
    CHECK(pig.verdict == DimVerdict::fail);
    CHECK(pig.certificate == CertificateKind::pigeonhole);
    CHECK(*pig.range_bound == 202);
    REQUIRE(pig.flagged_cardinality);
    CHECK(*pig.flagged_cardinality > 202);

    CHECK(code_of([&] { check_s_star(line, line.domain(), 5, {20}, 16, 0); }) ==
          ErrorCode::invalid_schedule);
    CHECK(code_of([&] { check_s_star(line, line.domain(), 0, {}, 16, 0); }) ==
          ErrorCode::invalid_schedule);
}

TEST_CASE("pigeonhole fails are confirmed by enumeration") {
    auto d = make_domain({4, 4});
    Model scorer = classifier_model(d, {ClassifierRule{"a", pt({0, 0}), Rational(1, 3)}}, 2);
    auto entry = check_s_star(scorer, d, 1, {8, 16}, 4096, 0);
    CHECK(entry.verdict == DimVerdict::fail);
    CHECK(entry.certificate == CertificateKind::pigeonhole);
    auto ext = extend_dimension(d, 1, *entry.flagged_scale);
    auto collision = find_collision(scorer, ext, 1 << 16, 0);
    REQUIRE(collision);
    CHECK(scorer.eval(collision->first) == scorer.eval(collision->second));
}

TEST_CASE("collision persistence under extension") {
    Model sum = affine_model(make_domain({2, 2}), {Rational(1), Rational(1)}, Rational(0));
    auto r = check_s_fast(sum, sum.domain(), 100);
    REQUIRE(r.witness_collision);
    auto ext = extend_dimension(sum.domain(), 0, 8);
    CHECK(ext.contains(r.witness_collision->first));
    CHECK(ext.contains(r.witness_collision->second));
    CHECK(sum.eval(r.witness_collision->first) == sum.eval(r.witness_collision->second));
    CHECK(check_s_fast(sum, ext, 100).verdict == Verdict::fail);
}

TEST_CASE("classify") {
    Model tab = table_10_default0();
    CHECK(classify(tab, tab.domain(), default_schedule_multipliers(), 256, 0).overall ==
          OverallVerdict::non_learning);

    Model line = affine_model(make_domain({10}), {Rational(2)}, Rational(0));
    CHECK(classify(line, line.domain(), default_schedule_multipliers(), 256, 0).overall ==
          OverallVerdict::complete_learning);

    auto cdom = make_domain({10, 10});
    Model scorer = classifier_model(cdom, {ClassifierRule{"a", pt({0, 0}), Rational(1, 5)},
                                           ClassifierRule{"b", pt({9, 9}), Rational(1, 5)}},
                                    100);
    auto report = classify(scorer, cdom, default_schedule_multipliers(), 256, 0);
    CHECK(report.overall == OverallVerdict::non_learning);
    for (const auto& e : report.dims) CHECK(e.certificate == CertificateKind::pigeonhole);

    Model oracle = oracle_injective_model(make_domain({4, 4}));
    CHECK(classify(oracle, oracle.domain(), default_schedule_multipliers(), 256, 0).overall ==
          OverallVerdict::complete_learning);

    Model tiny = affine_model(make_domain({1}), {Rational(1)}, Rational(0));
    CHECK(code_of([&] {
              classify(tiny, tiny.domain(), default_schedule_multipliers(), 256, 0);
          }) == ErrorCode::degenerate_domain);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    auto big = make_domain({100000, 100000});
    Model tab = lookup_table_model(big, {}, iv(1));
    auto r1 = classify(tab, big, {2, 4}, 200, 99);
    auto r2 = classify(tab, big, {2, 4}, 200, 99);
    CHECK(render_machine(star_report_json(r1)) == render_machine(star_report_json(r2)));
}

TEST_CASE("star report rendering") {
    Model enc = affine_model(make_domain({3, 3}), {Rational(1), Rational(3)}, Rational(0));
    auto report = classify(enc, enc.domain(), default_schedule_multipliers(), 256, 0);
    CHECK(star_dim_line(report.dims[0]) ==
          "dim 0: FAIL (collision-witness (3,0) ~ (0,1) -> 3)");
    CHECK(star_dim_line(report.dims[1]) == "dim 1: PASS (symbolic-injective)");
}
