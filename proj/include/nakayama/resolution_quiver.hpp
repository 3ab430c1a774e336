#pragma once

#include <cstdint>
#include <vector>

#include "nakayama/kupisch.hpp"

namespace nakayama {

/// Functional graph on vertices 1..n: one out-arrow per vertex.
struct ResolutionQuiver {
    std::int64_t n = 0;
    std::vector<std::int64_t> succ; // succ[i-1] = target of the arrow at i

    std::int64_t at(std::int64_t i) const { return succ[static_cast<std::size_t>(i - 1)]; }
};

struct CycleData {
    std::vector<std::int64_t> vertices; // successor order, least vertex first
    std::int64_t size = 0;
    std::int64_t weight = 0;
    bool black = false;
};

struct QuiverCycles {
    std::vector<CycleData> cycles; // sorted by least vertex
    std::int64_t componentCount = 0;
    std::int64_t weight = 0; // common cycle weight
};

/// The map f_A: succ(i) = ((c_i + i - 1) mod n) + 1.
ResolutionQuiver resolutionQuiver(const KupischSeries& ks);

/// The psi map: succ(j) = ((j - d_j - 1) mod n) + 1; realizes the resolution
/// quiver of the opposite algebra up to relabeling.
ResolutionQuiver psiQuiver(const KupischSeries& ks);

/// Cycle decomposition with weights from c_i and gamma-black flags.
QuiverCycles cycles(const ResolutionQuiver& rq, const KupischSeries& ks);

/// Cycle decomposition of the psi quiver with weights from d_j and
/// psi-black flags.
QuiverCycles psiCycles(const ResolutionQuiver& psiRq, const KupischSeries& ks);

/// pd S_i != 1, decided from the sequence alone: S_i projective, or rad P_i
/// not projective.
bool isBlackSimple(const KupischSeries& ks, std::int64_t i);

/// id S_j != 1, the dual closed form over the lengths d_j.
bool isPsiBlackSimple(const KupischSeries& ks, std::int64_t j);

/// Connected resolution quiver of weight 1.
bool hasFiniteGlobalDimension(const KupischSeries& ks);

/// Finite global dimension, or every cycle black.
bool isGorenstein(const KupischSeries& ks);

struct CyclicSets {
    std::vector<std::int64_t> gammaCyclic; // ascending
    std::vector<std::int64_t> psiCyclic;   // ascending
};
CyclicSets cyclicSets(const KupischSeries& ks);

} // namespace nakayama
