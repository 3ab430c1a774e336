#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "nakayama/kupisch.hpp"

using namespace nakayama;

namespace {

std::vector<std::int64_t> vec(std::initializer_list<std::int64_t> v) { return v; }

void expectParseError(std::string_view text, Errc code) {
    try {
        parse(text);
        FAIL_CHECK("expected a parse error for '" << std::string(text) << "'");
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

// independent oracle: least rotation by trying all of them
std::vector<std::int64_t> bruteLeastRotation(const std::vector<std::int64_t>& c) {
    const auto n = static_cast<std::int64_t>(c.size());
    auto best = c;
    for (std::int64_t r = 1; r < n; ++r) {
        std::vector<std::int64_t> rot;
        for (std::int64_t k = 0; k < n; ++k)
            rot.push_back(c[static_cast<std::size_t>((k + r) % n)]);
        best = std::min(best, rot);
    }
    return best;
}

} // namespace

TEST_CASE("parse accepts valid cyclic and linear series") {
    const auto a = parse("2,3,3,3");
    CHECK(a.n() == 4);
    CHECK(a.c == vec({2, 3, 3, 3}));
    CHECK(a.shape == Shape::Cyclic);

    const auto b = parse("2,1");
    CHECK(b.n() == 2);
    CHECK(b.c == vec({2, 1}));
    CHECK(b.shape == Shape::Linear);

    const auto spaced = parse("  2 3\t3 ");
    CHECK(spaced.c == vec({2, 3, 3}));
}

TEST_CASE("parse rejects invalid input") {
    expectParseError("", Errc::EmptyInput);
    expectParseError(" , ", Errc::EmptyInput);
    expectParseError("2,0,2", Errc::NonPositiveEntry);
    expectParseError("2,-3", Errc::NonPositiveEntry);
    expectParseError("2,x", Errc::NonPositiveEntry);
    // c_{i+1} >= c_i - 1 fails after the 1 is rotated to the end
    expectParseError("3,1,2", Errc::AdmissibilityViolation);
    // two simple projectives cannot come from a connected algebra
    expectParseError("1,1", Errc::DisconnectedAlgebra);
    expectParseError("2,1,3,1", Errc::DisconnectedAlgebra);
    // cyclic violation: 2 < 4 - 1
    expectParseError("4,2,3", Errc::AdmissibilityViolation);
}

TEST_CASE("a unique 1-entry is rotated to the last position") {
    const auto a = parse("1,2");
    CHECK(a.c == vec({2, 1}));
    CHECK(a.shape == Shape::Linear);

    const auto b = parse("2,1,2");
    CHECK(b.c == vec({2, 2, 1}));
}

TEST_CASE("n = 1 series") {
    const auto simple = parse("1");
    CHECK(simple.shape == Shape::Linear);
    CHECK(isSelfinjective(simple));

    const auto truncated = parse("5");
    CHECK(truncated.shape == Shape::Cyclic);
    CHECK(isSelfinjective(truncated));
}

TEST_CASE("normalize") {
    // only the rotation (2,3) satisfies c_1 = p = c_n - 1; checked against
    // both rotations by hand
    const auto ns = normalize(parse("3,2"));
    CHECK(ns.series.c == vec({2, 3}));
    CHECK(ns.rotationOffset == 1);

    const auto already = normalize(parse("2,3,3,3"));
    CHECK(already.series.c == vec({2, 3, 3, 3}));
    CHECK(already.rotationOffset == 0);

    const auto self = normalize(parse("3,3,3"));
    CHECK(self.series.c == vec({3, 3, 3}));
    CHECK(self.rotationOffset == 0);

    const auto lin = normalize(parse("2,1"));
    CHECK(lin.rotationOffset == 0);
}

TEST_CASE("canonicalForm picks the least rotation") {
    CHECK(canonicalForm(parse("3,2,3")).c == vec({2, 3, 3}));
    CHECK(canonicalForm(parse("2,2")).c == vec({2, 2}));
    CHECK(canonicalForm(parse("4,4,4")).c == vec({4, 4, 4}));
}

TEST_CASE("canonicalForm agrees with the brute-force least rotation") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 800; ++trial) {
        // small alphabets produce long runs and ties, the hard case for
        // least-rotation scans
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % (trial % 2 ? 8 : 48));
        std::vector<std::int64_t> c(static_cast<std::size_t>(n));
        for (auto& v : c) v = 2 + static_cast<std::int64_t>(rng() % (trial % 3 ? 2 : 5));
        // smooth into admissibility: c_i <= c_{i+1} + 1 cyclically
        for (int pass = 0; pass < 2; ++pass)
            for (std::int64_t i = n - 1; i >= 0; --i) {
                auto& cur = c[static_cast<std::size_t>(i)];
                const auto nxt = c[static_cast<std::size_t>((i + 1) % n)];
                cur = std::min(cur, nxt + 1);
            }
        const auto ks = makeSeries(c);
        CHECK(canonicalForm(ks).c == bruteLeastRotation(c));
        CHECK(canonicalForm(canonicalForm(ks)) == canonicalForm(ks));
    }
}

TEST_CASE("isSelfinjective") {
    CHECK(isSelfinjective(parse("4,4,4")));
    CHECK_FALSE(isSelfinjective(parse("2,3,3")));
    CHECK(isSelfinjective(parse("1")));
    CHECK_FALSE(isSelfinjective(parse("2,1")));
}

TEST_CASE("round trip and rotation properties") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 7);
        std::vector<std::int64_t> c(static_cast<std::size_t>(n));
        for (auto& v : c) v = 2 + static_cast<std::int64_t>(rng() % 6);
        for (int pass = 0; pass < 2; ++pass)
            for (std::int64_t i = n - 1; i >= 0; --i)
                c[static_cast<std::size_t>(i)] =
                    std::min(c[static_cast<std::size_t>(i)],
                             c[static_cast<std::size_t>((i + 1) % n)] + 1);
        const auto ks = makeSeries(c);

        CHECK(parse(render(ks)) == ks);

        const auto ns = normalize(ks);
        auto sorted = ks.c, sortedNorm = ns.series.c;
        std::sort(sorted.begin(), sorted.end());
        std::sort(sortedNorm.begin(), sortedNorm.end());
        CHECK(sorted == sortedNorm);
        if (!isSelfinjective(ks)) {
            const auto p = minEntry(ks);
            CHECK(ns.series.at(1) == p);
            CHECK(ns.series.at(n) == p + 1);
        }
    }
}
