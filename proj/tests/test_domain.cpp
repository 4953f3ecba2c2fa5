#include "sstar/domain.hpp"
#include "sstar/fibers.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace sstar;
using namespace sstar::test;

TEST_CASE("domain construction and cardinality") {
    auto d = make_domain({3, 3});
    CHECK(d.cardinality() == 9);
    CHECK(d.cardinality_log10() == doctest::Approx(0.954).epsilon(0.01));

    CHECK(make_domain({2}).cardinality() == 2);
    CHECK(make_domain({1}).cardinality() == 1);
    CHECK(make_domain({1}).degenerate());

    CHECK(code_of([] { make_domain({}); }) == ErrorCode::invalid_domain);
    CHECK(code_of([] { make_domain({3, 0}); }) == ErrorCode::invalid_domain);
    CHECK(code_of([] { make_domain({-1}); }) == ErrorCode::invalid_domain);
}

TEST_CASE("retina-scale domain stays exact") {
    auto d = make_domain(std::vector<std::int64_t>(40000, 256));
    BigInt expected = boost::multiprecision::pow(BigInt(256), 40000);
    CHECK(d.cardinality() == expected);
    CHECK(d.cardinality_log10() == doctest::Approx(96329.6).epsilon(1e-4));
}

TEST_CASE("lexicographic enumeration") {
    auto pts = enumerate_points(make_domain({2, 2}), 10);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == pt({0, 0}));
    CHECK(pts[1] == pt({0, 1}));
    CHECK(pts[2] == pt({1, 0}));
    CHECK(pts[3] == pt({1, 1}));

    auto single = enumerate_points(make_domain({3}), 3);
    REQUIRE(single.size() == 3);
    CHECK(single[2] == pt({2}));

    // deterministic: two runs agree
    CHECK(enumerate_points(make_domain({3, 2}), 100) == enumerate_points(make_domain({3, 2}), 100));

    CHECK(code_of([] { enumerate_points(make_domain({100, 100, 100}), 1000); }) ==
          ErrorCode::budget_exceeded);
}

TEST_CASE("extend_dimension") {
    auto d = make_domain({3, 3});
    auto e = extend_dimension(d, 0, 4);
    CHECK(e.scales() == std::vector<std::int64_t>{4, 3});

    auto identity = extend_dimension(d, 1, 3);
    CHECK(identity.scales() == d.scales());

    CHECK(code_of([&] { extend_dimension(d, 0, 2); }) == ErrorCode::invalid_extension);
    CHECK(code_of([&] { extend_dimension(d, 5, 9); }) == ErrorCode::invalid_extension);

    // monotone: every original point stays valid
    for (const auto& p : enumerate_points(d, 100)) CHECK(e.contains(p));
}

TEST_CASE("fibers of small models") {
    auto d = make_domain({4});
    Model parity = lookup_table_model(
        d,
        {{pt({0}), iv(0)}, {pt({1}), iv(1)}, {pt({2}), iv(0)}, {pt({3}), iv(1)}},
        OutputValue::null_atom());
    std::set<Point> all{pt({0}), pt({1}), pt({2}), pt({3})};
    auto gens = fibers(parity, all);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].representation == iv(0));
    CHECK(gens[0].fiber == std::set<Point>{pt({0}), pt({2})});
    CHECK(gens[0].invariant_flag);
    CHECK(gens[1].fiber == std::set<Point>{pt({1}), pt({3})});
    CHECK(gens[1].invariant_flag);

    Model doubler = affine_model(make_domain({3}), {Rational(2)}, Rational(0));
    auto inj = fibers(doubler, {pt({0}), pt({1}), pt({2})});
    REQUIRE(inj.size() == 3);
    for (const auto& g : inj) {
        CHECK(g.fiber.size() == 1);
        CHECK_FALSE(g.invariant_flag);
    }

    CHECK(fibers(doubler, {}).empty());
    CHECK(code_of([&] { fibers(doubler, {pt({7})}); }) == ErrorCode::domain_mismatch);
}

TEST_CASE("fibers partition the analyzed subset") {
    std::mt19937_64 rng(7);
    std::vector<OutputValue> pool{iv(0), iv(1), OutputValue::atom("a")};
    for (int trial = 0; trial < 50; ++trial) {
        auto d = make_domain({2, 3});
        Model m = random_table_model(d, pool, rng);
        auto points = enumerate_points(d, 100);
        std::set<Point> subset;
        for (const auto& p : points)
            if (rng() % 2) subset.insert(p);

        auto gens = fibers(m, subset);
        std::set<Point> covered;
        std::set<OutputValue> reps;
        std::size_t total = 0;
        for (const auto& g : gens) {
            reps.insert(g.representation);
            total += g.fiber.size();
            covered.insert(g.fiber.begin(), g.fiber.end());
            for (const auto& p : g.fiber) CHECK(m.eval(p) == g.representation);
            CHECK(g.invariant_flag == (g.fiber.size() >= 2));
        }
        CHECK(covered == subset);       // union is the subset
        CHECK(total == subset.size());  // pairwise disjoint
        CHECK(reps.size() == gens.size());
    }
}
