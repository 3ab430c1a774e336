#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nakayama/cartan.hpp"
#include "nakayama/kupisch.hpp"

namespace nakayama {

struct CensusConfig {
    std::int64_t nMax = 6;
    std::int64_t cMax = 9;
    std::vector<std::string> checks; // empty = all registered checks
    std::int64_t budget = 100000;    // bounded-enumeration budget (vector count)
    int jobs = 1;
};

struct Counterexample {
    std::string series;
    std::string detail;
};

struct CheckStats {
    std::int64_t passes = 0;
    std::int64_t failures = 0;
    std::int64_t skips = 0;
    std::optional<Counterexample> firstCounterexample;
};

/// A documented deviation that is not treated as a failure (currently only
/// linear-case exceptions to the psi-map identities, should any exist).
struct Finding {
    std::string check;
    std::string series;
    std::string detail;
};

struct CensusReport {
    std::int64_t algebrasChecked = 0;
    std::map<std::string, CheckStats> perCheck;
    std::vector<Finding> findings;
    double elapsedSeconds = 0.0;

    bool allPassed() const {
        for (const auto& [id, st] : perCheck)
            if (st.failures > 0) return false;
        return true;
    }
};

/// Every valid connected algebra with n simples: cyclic series with entries
/// in [2, cMax] up to rotation (lexicographic order of the canonical form),
/// followed by linear series with the 1-entry last. Deterministic order.
std::vector<KupischSeries> enumerateAlgebras(std::int64_t n, std::int64_t cMax);

std::vector<std::string> allCheckIds();

/// Run every selected check on every enumerated algebra. The aggregation is
/// order-independent, so the report is identical for any job count.
CensusReport verifyAll(const CensusConfig& cfg);

} // namespace nakayama
