#pragma once

#include <vector>

#include "nakayama/kupisch.hpp"

namespace nakayama {

/// The sequence A = A_0 -> A_1 -> ... -> A_r of left retractions; A_r is
/// the first selfinjective algebra reached. Every step is recorded in its
/// normalized presentation.
struct RetractionChain {
    std::vector<NormalizedSeries> steps;
    KupischSeries terminal;
};

/// c'_i = c_i - floor((c_i + i - 1)/n) on a normalized non-selfinjective
/// series; drops one simple module.
KupischSeries leftRetract(const NormalizedSeries& ns);

RetractionChain retractionChain(const KupischSeries& ks);

bool terminalIsSimple(const RetractionChain& chain);

} // namespace nakayama
