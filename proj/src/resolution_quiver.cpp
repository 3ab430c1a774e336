#include "nakayama/resolution_quiver.hpp"

#include <algorithm>
#include <functional>

#include "nakayama/homology.hpp"

namespace nakayama {

ResolutionQuiver resolutionQuiver(const KupischSeries& ks) {
    const auto n = ks.n();
    ResolutionQuiver rq{n, std::vector<std::int64_t>(static_cast<std::size_t>(n))};
    for (std::int64_t i = 1; i <= n; ++i)
        rq.succ[static_cast<std::size_t>(i - 1)] = vertex(ks.at(i) + i, n);
    return rq;
}

ResolutionQuiver psiQuiver(const KupischSeries& ks) {
    const auto n = ks.n();
    const auto d = injectiveLengths(ks);
    ResolutionQuiver rq{n, std::vector<std::int64_t>(static_cast<std::size_t>(n))};
    for (std::int64_t j = 1; j <= n; ++j)
        rq.succ[static_cast<std::size_t>(j - 1)] = vertex(j - d[static_cast<std::size_t>(j - 1)], n);
    return rq;
}

namespace {

// Iterative rho-walk over the functional graph; every unvisited walk either
// discovers a new cycle or runs into an already finished vertex.
QuiverCycles decompose(const ResolutionQuiver& rq,
                       const std::vector<std::int64_t>& lengths,
                       const std::function<bool(std::int64_t)>& isBlack) {
    const auto n = rq.n;
    std::vector<std::uint8_t> state(static_cast<std::size_t>(n), 0); // 0 new, 1 on path, 2 done
    std::vector<std::int64_t> path;
    QuiverCycles out;

    for (std::int64_t start = 1; start <= n; ++start) {
        if (state[static_cast<std::size_t>(start - 1)] != 0) continue;
        path.clear();
        std::int64_t v = start;
        while (state[static_cast<std::size_t>(v - 1)] == 0) {
            state[static_cast<std::size_t>(v - 1)] = 1;
            path.push_back(v);
            v = rq.at(v);
        }
        if (state[static_cast<std::size_t>(v - 1)] == 1) {
            // new cycle: the suffix of the path starting at v
            auto it = std::find(path.begin(), path.end(), v);
            CycleData cd;
            cd.vertices.assign(it, path.end());
            cd.size = static_cast<std::int64_t>(cd.vertices.size());

            // rotate so the least vertex comes first, keeping successor order
            const auto least =
                std::min_element(cd.vertices.begin(), cd.vertices.end()) - cd.vertices.begin();
            std::rotate(cd.vertices.begin(), cd.vertices.begin() + least, cd.vertices.end());

            __int128 sum = 0;
            cd.black = true;
            for (const auto u : cd.vertices) {
                sum += lengths[static_cast<std::size_t>(u - 1)];
                cd.black = cd.black && isBlack(u);
            }
            if (sum % n != 0) {
                fail(Errc::NonIntegerWeight,
                     "cycle through vertex " + std::to_string(cd.vertices.front()) +
                         " has non-integer weight");
            }
            cd.weight = static_cast<std::int64_t>(sum / n);
            out.cycles.push_back(std::move(cd));
        }
        for (const auto u : path) state[static_cast<std::size_t>(u - 1)] = 2;
    }

    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const CycleData& a, const CycleData& b) {
                  return a.vertices.front() < b.vertices.front();
              });
    out.componentCount = static_cast<std::int64_t>(out.cycles.size());
    out.weight = out.cycles.front().weight;
    return out;
}

} // namespace

QuiverCycles cycles(const ResolutionQuiver& rq, const KupischSeries& ks) {
    return decompose(rq, ks.c, [&](std::int64_t i) { return isBlackSimple(ks, i); });
}

QuiverCycles psiCycles(const ResolutionQuiver& psiRq, const KupischSeries& ks) {
    const auto d = injectiveLengths(ks);
    return decompose(psiRq, d, [&](std::int64_t j) {
        const auto n = ks.n();
        const auto dj = d[static_cast<std::size_t>(j - 1)];
        return dj == 1 || d[static_cast<std::size_t>(vertex(j - 1, n) - 1)] != dj - 1;
    });
}

bool isBlackSimple(const KupischSeries& ks, std::int64_t i) {
    // pd S_i = 1 exactly when rad P_i is nonzero projective.
    const auto ci = ks.at(i);
    if (ci == 1) return true;
    return ks.at(vertex(i + 1, ks.n())) != ci - 1;
}

bool isPsiBlackSimple(const KupischSeries& ks, std::int64_t j) {
    const auto dj = injectiveLength(ks, j);
    if (dj == 1) return true;
    return injectiveLength(ks, vertex(j - 1, ks.n())) != dj - 1;
}

bool hasFiniteGlobalDimension(const KupischSeries& ks) {
    const auto qc = cycles(resolutionQuiver(ks), ks);
    return qc.componentCount == 1 && qc.weight == 1;
}

bool isGorenstein(const KupischSeries& ks) {
    const auto qc = cycles(resolutionQuiver(ks), ks);
    if (qc.componentCount == 1 && qc.weight == 1) return true; // finite global dimension
    return std::all_of(qc.cycles.begin(), qc.cycles.end(),
                       [](const CycleData& c) { return c.black; });
}

namespace {

std::vector<std::int64_t> verticesOnCycles(const QuiverCycles& qc) {
    std::vector<std::int64_t> out;
    for (const auto& c : qc.cycles)
        out.insert(out.end(), c.vertices.begin(), c.vertices.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

CyclicSets cyclicSets(const KupischSeries& ks) {
    return CyclicSets{verticesOnCycles(cycles(resolutionQuiver(ks), ks)),
                      verticesOnCycles(psiCycles(psiQuiver(ks), ks))};
}

} // namespace nakayama
