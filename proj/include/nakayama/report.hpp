#pragma once

#include <optional>
#include <string>

#include "nakayama/cartan.hpp"
#include "nakayama/census.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/resolution_quiver.hpp"
#include "nakayama/retraction.hpp"

namespace nakayama {

struct AnalysisOptions {
    bool withOracle = false;
    bool withCartan = false;
    bool withRetraction = false;
};

struct OracleSection {
    std::vector<HomDimension> pd, id; // per simple, index i-1
    HomDimension globalDimension;
    bool gorenstein = false;
};

struct CartanSection {
    ExactMatrix matrix;
    BigInt det;
    std::int64_t rank = 0;
    std::vector<BigInt> snfDiagonal;
};

struct RetractionSection {
    RetractionChain chain;
    bool terminalSimple = false;
};

struct AnalysisReport {
    std::string input;
    KupischSeries series;
    NormalizedSeries normalized;
    bool selfinjective = false;
    ResolutionQuiver quiver;
    QuiverCycles quiverCycles;
    bool finiteGlobalDimension = false;
    bool gorenstein = false;
    std::optional<OracleSection> oracle;
    std::optional<CartanSection> cartan;
    std::optional<RetractionSection> retraction;
};

AnalysisReport analyze(const KupischSeries& ks, const AnalysisOptions& opts = {});

std::string toText(const AnalysisReport& r);
std::string toStructured(const AnalysisReport& r); // one JSON document, one line

std::string toText(const CensusReport& r, const CensusConfig& cfg);
std::string toStructured(const CensusReport& r, const CensusConfig& cfg);

} // namespace nakayama
