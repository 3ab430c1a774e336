#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/errors.hpp"

namespace nakayama {

enum class Shape { Cyclic, Linear };

/// Admissible sequence (c_1,...,c_n) of a connected Nakayama algebra.
/// c_i is the composition length of the projective cover P_i, ordered so
/// that rad P_i is a factor module of P_{i+1} (indices mod n when cyclic).
/// Vertices are 1-based everywhere in the public API.
struct KupischSeries {
    Shape shape = Shape::Cyclic;
    std::vector<std::int64_t> c;

    std::int64_t n() const { return static_cast<std::int64_t>(c.size()); }
    std::int64_t at(std::int64_t i) const { return c[static_cast<std::size_t>(i - 1)]; }

    bool operator==(const KupischSeries&) const = default;
};

/// A rotation of a series that satisfies the normalization convention:
/// c_1 = p(A) = c_n - 1 for cyclic non-selfinjective algebras, the unique
/// 1-entry last for linear ones, identity for selfinjective ones.
struct NormalizedSeries {
    KupischSeries series;
    std::int64_t rotationOffset = 0; // normalized[k] = original[(k + offset) mod n]
};

/// Reduce x into [0, n).
inline std::int64_t wrap(std::int64_t x, std::int64_t n) {
    x %= n;
    return x < 0 ? x + n : x;
}

/// 1-based cyclic index: maps any integer onto [1, n].
inline std::int64_t vertex(std::int64_t i, std::int64_t n) {
    return wrap(i - 1, n) + 1;
}

/// Validate raw entries and infer the shape. A unique 1-entry is rotated to
/// the last position; series with several 1-entries present a disconnected
/// algebra and are rejected.
KupischSeries makeSeries(std::vector<std::int64_t> entries);

/// Parse a comma- or whitespace-separated list of positive integers.
KupischSeries parse(std::string_view text);

std::string render(const KupischSeries& ks);

/// Constant cyclic sequences (m,...,m), plus the simple algebra (1).
bool isSelfinjective(const KupischSeries& ks);

std::int64_t minEntry(const KupischSeries& ks); // p(A)

KupischSeries rotated(const KupischSeries& ks, std::int64_t offset);

NormalizedSeries normalize(const KupischSeries& ks);

/// Lexicographically least rotation; identity on linear series.
KupischSeries canonicalForm(const KupischSeries& ks);

} // namespace nakayama
