#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "nakayama/homology.hpp"
#include "nakayama/resolution_quiver.hpp"

using namespace nakayama;

namespace {

std::vector<std::int64_t> vec(std::initializer_list<std::int64_t> v) { return v; }

} // namespace

TEST_CASE("successor map") {
    CHECK(resolutionQuiver(parse("2,3,3")).succ == vec({3, 2, 3}));
    CHECK(resolutionQuiver(parse("2,3,3,3")).succ == vec({3, 1, 2, 3}));
    // the simple projective maps to the simple injective
    CHECK(resolutionQuiver(parse("2,1")).succ == vec({1, 1}));
}

TEST_CASE("cycle extraction") {
    const auto ks = parse("2,3,3");
    const auto qc = cycles(resolutionQuiver(ks), ks);
    REQUIRE(qc.cycles.size() == 2);
    CHECK(qc.componentCount == 2);
    CHECK(qc.cycles[0].vertices == vec({2}));
    CHECK(qc.cycles[0].weight == 1);
    CHECK(qc.cycles[0].black);
    CHECK(qc.cycles[1].vertices == vec({3}));
    CHECK(qc.cycles[1].weight == 1);
    CHECK_FALSE(qc.cycles[1].black);

    const auto big = parse("2,3,3,3");
    const auto qb = cycles(resolutionQuiver(big), big);
    REQUIRE(qb.cycles.size() == 1);
    CHECK(qb.cycles[0].vertices == vec({1, 3, 2}));
    CHECK(qb.cycles[0].size == 3);
    CHECK(qb.cycles[0].weight == 2);
    CHECK(qb.cycles[0].black);

    // selfinjective (4,4,4): gcd(4,3) = 1 cycle of weight 4
    const auto si = parse("4,4,4");
    const auto qs = cycles(resolutionQuiver(si), si);
    REQUIRE(qs.cycles.size() == 1);
    CHECK(qs.cycles[0].vertices == vec({1, 2, 3}));
    CHECK(qs.cycles[0].weight == 4);
}

TEST_CASE("black simples match the projective-dimension oracle") {
    const auto ks = parse("2,3,3");
    CHECK_FALSE(isBlackSimple(ks, 3)); // rad P_3 = P_1
    CHECK(isBlackSimple(ks, 2));
    CHECK(isBlackSimple(parse("2,1"), 2)); // projective simple, pd 0

    std::mt19937 rng(5150);
    for (int trial = 0; trial < 80; ++trial) {
        const std::int64_t n = 1 + rng() % 6;
        std::vector<std::int64_t> c(static_cast<std::size_t>(n));
        for (auto& v : c) v = 2 + static_cast<std::int64_t>(rng() % 6);
        for (int pass = 0; pass < 2; ++pass)
            for (std::int64_t i = n - 1; i >= 0; --i)
                c[static_cast<std::size_t>(i)] = std::min(
                    c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>((i + 1) % n)] + 1);
        const auto ks2 = makeSeries(std::move(c));
        for (std::int64_t i = 1; i <= ks2.n(); ++i) {
            CHECK(isBlackSimple(ks2, i) ==
                  (projDim(ks2, SerialModule{i, 1}) != HomDimension::finite(1)));
            CHECK(isPsiBlackSimple(ks2, i) ==
                  (injDim(ks2, SerialModule{i, 1}) != HomDimension::finite(1)));
        }
    }
}

TEST_CASE("decisions") {
    CHECK(hasFiniteGlobalDimension(parse("2,3")));
    CHECK_FALSE(hasFiniteGlobalDimension(parse("2,2")));
    CHECK_FALSE(hasFiniteGlobalDimension(parse("2,3,3,3"))); // connected but w = 2

    CHECK_FALSE(isGorenstein(parse("2,3,3")));
    CHECK(isGorenstein(parse("2,3,3,3")));
    CHECK(isGorenstein(parse("4,4,4")));
    // finite global dimension forces Gorenstein even with a non-black cycle
    CHECK(isGorenstein(parse("2,1")));
}

TEST_CASE("psi quiver") {
    CHECK(psiQuiver(parse("2,3,3")).succ == vec({1, 2, 1}));
    CHECK(psiQuiver(parse("2,3,3,3")).succ == vec({2, 3, 1, 1}));
    CHECK(psiQuiver(parse("1")).succ == vec({1}));
}

TEST_CASE("cyclic sets") {
    const auto a = cyclicSets(parse("2,3,3"));
    CHECK(a.gammaCyclic == vec({2, 3}));
    CHECK(a.psiCyclic == vec({1, 2}));

    const auto b = cyclicSets(parse("2,3,3,3"));
    CHECK(b.gammaCyclic == vec({1, 2, 3}));
    CHECK(b.psiCyclic == vec({1, 2, 3}));

    const auto c = cyclicSets(parse("4,4,4"));
    CHECK(c.gammaCyclic == vec({1, 2, 3}));
    CHECK(c.psiCyclic == vec({1, 2, 3}));
}

TEST_CASE("all cycles share one weight and cover each component") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 150; ++trial) {
        const std::int64_t n = 1 + rng() % 8;
        std::vector<std::int64_t> c(static_cast<std::size_t>(n));
        for (auto& v : c) v = 2 + static_cast<std::int64_t>(rng() % 8);
        for (int pass = 0; pass < 2; ++pass)
            for (std::int64_t i = n - 1; i >= 0; --i)
                c[static_cast<std::size_t>(i)] = std::min(
                    c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>((i + 1) % n)] + 1);
        const auto ks = makeSeries(std::move(c));
        const auto qc = cycles(resolutionQuiver(ks), ks);
        for (const auto& cy : qc.cycles) CHECK(cy.weight == qc.weight);

        std::int64_t onCycles = 0;
        for (const auto& cy : qc.cycles) onCycles += cy.size;
        CHECK(onCycles <= ks.n());
        CHECK(qc.componentCount == static_cast<std::int64_t>(qc.cycles.size()));
    }
}
