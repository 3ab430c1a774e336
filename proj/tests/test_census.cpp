#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "nakayama/census.hpp"
#include "nakayama/report.hpp"

using namespace nakayama;

namespace {

std::set<std::vector<std::int64_t>> asSet(const std::vector<KupischSeries>& v) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& ks : v) out.insert(ks.c);
    return out;
}

// Slow-path enumeration: filter every tuple in [1, cMax]^n through the
// validator and deduplicate by canonical rotation.
std::set<std::vector<std::int64_t>> bruteEnumerate(std::int64_t n, std::int64_t cMax) {
    std::set<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 1);
    for (;;) {
        try {
            const auto ks = makeSeries(cur);
            out.insert(canonicalForm(ks).c);
        } catch (const Error&) {
            // not a connected admissible sequence
        }
        std::int64_t pos = n - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == cMax) {
            cur[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::string censusJsonWithoutElapsed(const CensusReport& r, const CensusConfig& cfg) {
    auto s = toStructured(r, cfg);
    const auto pos = s.find("\"elapsedSeconds\"");
    REQUIRE(pos != std::string::npos);
    return s.substr(0, pos);
}

} // namespace

TEST_CASE("enumerate: spec examples") {
    const auto one = enumerateAlgebras(1, 3);
    CHECK(asSet(one) == std::set<std::vector<std::int64_t>>{{1}, {2}, {3}});

    const auto two = enumerateAlgebras(2, 2);
    CHECK(asSet(two) == std::set<std::vector<std::int64_t>>{{2, 2}, {2, 1}});

    const auto three = enumerateAlgebras(2, 3);
    CHECK(asSet(three) ==
          std::set<std::vector<std::int64_t>>{{2, 2}, {2, 3}, {3, 3}, {2, 1}});
}

TEST_CASE("enumerate matches the brute-force filter for small n") {
    for (std::int64_t n = 1; n <= 4; ++n)
        for (std::int64_t cMax : {1, 2, 3, 5}) {
            const auto fast = enumerateAlgebras(n, cMax);
            CHECK(asSet(fast) == bruteEnumerate(n, cMax));
            CHECK(fast.size() == asSet(fast).size()); // no duplicates
        }
}

TEST_CASE("enumerate output is canonical and deterministic") {
    const auto a = enumerateAlgebras(5, 6);
    const auto b = enumerateAlgebras(5, 6);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k] == b[k]);
        CHECK(canonicalForm(a[k]) == a[k]);
    }
}

TEST_CASE("verifyAll on a small range has zero failures") {
    CensusConfig cfg;
    cfg.nMax = 3;
    cfg.cMax = 4;
    const auto report = verifyAll(cfg);
    CHECK(report.allPassed());
    CHECK(report.algebrasChecked > 0);
    for (const auto& [id, st] : report.perCheck) {
        INFO("check ", id);
        CHECK(st.failures == 0);
    }
}

TEST_CASE("single algebra census") {
    CensusConfig cfg;
    cfg.nMax = 1;
    cfg.cMax = 1;
    const auto report = verifyAll(cfg);
    CHECK(report.algebrasChecked == 1);
    CHECK(report.allPassed());
}

TEST_CASE("census is deterministic and job-count independent") {
    CensusConfig cfg;
    cfg.nMax = 4;
    cfg.cMax = 5;

    const auto r1 = verifyAll(cfg);
    const auto r2 = verifyAll(cfg);
    CHECK(censusJsonWithoutElapsed(r1, cfg) == censusJsonWithoutElapsed(r2, cfg));

    auto parallel = cfg;
    parallel.jobs = 4;
    const auto r3 = verifyAll(parallel);
    CHECK(r1.algebrasChecked == r3.algebrasChecked);
    for (const auto& [id, st] : r1.perCheck) {
        const auto& other = r3.perCheck.at(id);
        CHECK(st.passes == other.passes);
        CHECK(st.failures == other.failures);
        CHECK(st.skips == other.skips);
    }
}

TEST_CASE("check selection and invalid configs") {
    CensusConfig cfg;
    cfg.nMax = 2;
    cfg.cMax = 3;
    cfg.checks = {"finite_gldim_decision", "snf_shape"};
    const auto report = verifyAll(cfg);
    CHECK(report.perCheck.size() == 2);
    CHECK(report.perCheck.count("finite_gldim_decision") == 1);

    cfg.checks = {"no_such_check"};
    CHECK_THROWS_AS(verifyAll(cfg), std::invalid_argument);

    CensusConfig bad;
    bad.nMax = 0;
    CHECK_THROWS_AS(verifyAll(bad), std::invalid_argument);
}

TEST_CASE("budget skips are reported as skips, never as passes") {
    CensusConfig cfg;
    cfg.nMax = 3;
    cfg.cMax = 9;
    cfg.budget = 1; // forces the bounded enumeration to be skipped
    cfg.checks = {"linear_systems"};
    const auto report = verifyAll(cfg);
    const auto& st = report.perCheck.at("linear_systems");
    CHECK(st.failures == 0);
    CHECK(st.skips > 0);
    CHECK(st.passes + st.skips == report.algebrasChecked);
}
