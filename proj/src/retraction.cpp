#include "nakayama/retraction.hpp"

namespace nakayama {

KupischSeries leftRetract(const NormalizedSeries& ns) {
    const auto& ks = ns.series;
    if (isSelfinjective(ks))
        fail(Errc::SelfinjectiveInput, "left retraction undefined on (" + render(ks) + ")");
    const auto n = ks.n();
    std::vector<std::int64_t> out(static_cast<std::size_t>(n - 1));
    for (std::int64_t i = 1; i <= n - 1; ++i)
        out[static_cast<std::size_t>(i - 1)] = ks.at(i) - (ks.at(i) + i - 1) / n;
    return makeSeries(std::move(out));
}

RetractionChain retractionChain(const KupischSeries& ks) {
    RetractionChain chain;
    KupischSeries cur = ks;
    for (;;) {
        NormalizedSeries ns = normalize(cur);
        const bool terminal = isSelfinjective(ns.series);
        chain.steps.push_back(ns);
        if (terminal) {
            chain.terminal = std::move(ns.series);
            return chain;
        }
        cur = leftRetract(chain.steps.back());
    }
}

bool terminalIsSimple(const RetractionChain& chain) {
    return chain.terminal.n() == 1 && chain.terminal.c[0] == 1;
}

} // namespace nakayama
