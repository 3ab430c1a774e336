#include "nakayama/homology.hpp"

#include <algorithm>
#include <unordered_set>

namespace nakayama {

std::int64_t socleIndex(const KupischSeries& ks, SerialModule m) {
    return vertex(m.top + m.length - 1, ks.n());
}

SerialModule projectiveModule(const KupischSeries& ks, std::int64_t i) {
    return SerialModule{i, ks.at(i)};
}

SerialModule injectiveModule(const KupischSeries& ks, std::int64_t j) {
    const auto d = injectiveLength(ks, j);
    return SerialModule{vertex(j - d + 1, ks.n()), d};
}

std::optional<SerialModule> syzygy(const KupischSeries& ks, SerialModule m) {
    const auto len = ks.at(m.top) - m.length;
    if (len == 0) return std::nullopt; // m is projective
    return SerialModule{vertex(m.top + m.length, ks.n()), len};
}

std::int64_t injectiveLength(const KupischSeries& ks, std::int64_t j) {
    // Largest l with l <= c_{j-l+1}; the admissibility inequalities make the
    // feasible set downward closed, so scan upward until the first failure.
    const auto n = ks.n();
    std::int64_t l = 1;
    while (l + 1 <= ks.at(vertex(j - l, n))) ++l;
    return l;
}

std::vector<std::int64_t> injectiveLengths(const KupischSeries& ks) {
    std::vector<std::int64_t> d(static_cast<std::size_t>(ks.n()));
    for (std::int64_t j = 1; j <= ks.n(); ++j)
        d[static_cast<std::size_t>(j - 1)] = injectiveLength(ks, j);
    return d;
}

std::optional<SerialModule> cosyzygy(const KupischSeries& ks, SerialModule m) {
    const auto s = socleIndex(ks, m);
    const auto d = injectiveLength(ks, s);
    if (m.length == d) return std::nullopt; // m is injective
    return SerialModule{vertex(s - d + 1, ks.n()), d - m.length};
}

namespace {

template <typename Step>
HomDimension iterateToZero(const KupischSeries& ks, SerialModule m, Step step) {
    const auto span = *std::max_element(ks.c.begin(), ks.c.end()) + 1;
    std::unordered_set<std::int64_t> seen;
    seen.insert(m.top * span + m.length);
    std::int64_t steps = 0;
    for (;;) {
        const auto next = step(ks, m);
        if (!next) return HomDimension::finite(steps);
        m = *next;
        ++steps;
        if (!seen.insert(m.top * span + m.length).second)
            return HomDimension::infinite(); // state revisited: dimension infinite
    }
}

} // namespace

HomDimension projDim(const KupischSeries& ks, SerialModule m) {
    return iterateToZero(ks, m, [](const KupischSeries& a, SerialModule x) { return syzygy(a, x); });
}

HomDimension injDim(const KupischSeries& ks, SerialModule m) {
    return iterateToZero(ks, m, [](const KupischSeries& a, SerialModule x) { return cosyzygy(a, x); });
}

HomDimension globalDim(const KupischSeries& ks) {
    std::int64_t best = 0;
    for (std::int64_t i = 1; i <= ks.n(); ++i) {
        const auto pd = projDim(ks, SerialModule{i, 1});
        if (!pd.isFinite()) return HomDimension::infinite();
        best = std::max(best, pd.value());
    }
    return HomDimension::finite(best);
}

std::int64_t gammaOracle(const KupischSeries& ks, std::int64_t i) {
    return vertex(socleIndex(ks, projectiveModule(ks, i)) + 1, ks.n());
}

std::int64_t psiOracle(const KupischSeries& ks, std::int64_t j) {
    return vertex(injectiveModule(ks, j).top - 1, ks.n());
}

bool isGorensteinOracle(const KupischSeries& ks) {
    for (std::int64_t i = 1; i <= ks.n(); ++i)
        if (!injDim(ks, projectiveModule(ks, i)).isFinite()) return false;
    for (std::int64_t j = 1; j <= ks.n(); ++j)
        if (!projDim(ks, injectiveModule(ks, j)).isFinite()) return false;
    return true;
}

} // namespace nakayama
