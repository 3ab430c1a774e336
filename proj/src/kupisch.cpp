#include "nakayama/kupisch.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace nakayama {

const char* errcName(Errc code) {
    switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NonPositiveEntry: return "NonPositiveEntry";
    case Errc::AdmissibilityViolation: return "AdmissibilityViolation";
    case Errc::DisconnectedAlgebra: return "DisconnectedAlgebra";
    case Errc::NoNormalizedRotation: return "NoNormalizedRotation";
    case Errc::SelfinjectiveInput: return "SelfinjectiveInput";
    case Errc::NonIntegerWeight: return "NonIntegerWeight";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    }
    return "UnknownError";
}

namespace {

std::string joinEntries(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) os << ',';
        os << v[k];
    }
    return os.str();
}

// Admissibility along the chain: c_{i+1} >= c_i - 1. `upTo` is the number of
// consecutive pairs to check (n for cyclic including the wrap, n-1 for linear).
void checkAdmissible(const std::vector<std::int64_t>& c, std::int64_t upTo) {
    const auto n = static_cast<std::int64_t>(c.size());
    for (std::int64_t i = 1; i <= upTo; ++i) {
        const std::int64_t cur = c[static_cast<std::size_t>(i - 1)];
        const std::int64_t nxt = c[static_cast<std::size_t>(wrap(i, n))];
        if (nxt < cur - 1) {
            fail(Errc::AdmissibilityViolation,
                 "c_" + std::to_string(i % n + 1) + " = " + std::to_string(nxt) +
                     " < c_" + std::to_string(i) + " - 1 = " + std::to_string(cur - 1) +
                     " in (" + joinEntries(c) + ")");
        }
    }
}

} // namespace

KupischSeries makeSeries(std::vector<std::int64_t> entries) {
    if (entries.empty()) fail(Errc::EmptyInput, "no entries");
    const auto n = static_cast<std::int64_t>(entries.size());
    for (std::int64_t i = 1; i <= n; ++i) {
        if (entries[static_cast<std::size_t>(i - 1)] < 1) {
            fail(Errc::NonPositiveEntry,
                 "c_" + std::to_string(i) + " = " +
                     std::to_string(entries[static_cast<std::size_t>(i - 1)]));
        }
    }

    const auto ones = std::count(entries.begin(), entries.end(), std::int64_t{1});

    if (n == 1) {
        return KupischSeries{entries[0] == 1 ? Shape::Linear : Shape::Cyclic,
                             std::move(entries)};
    }
    if (ones == 0) {
        checkAdmissible(entries, n);
        return KupischSeries{Shape::Cyclic, std::move(entries)};
    }
    if (ones > 1) {
        fail(Errc::DisconnectedAlgebra,
             std::to_string(ones) + " simple projectives in (" + joinEntries(entries) + ")");
    }

    // Exactly one 1-entry: rotate it to the last position, then the series
    // must be a valid linear (A_n type) sequence.
    const auto pos = static_cast<std::int64_t>(
        std::find(entries.begin(), entries.end(), std::int64_t{1}) - entries.begin());
    std::vector<std::int64_t> rot(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k)
        rot[static_cast<std::size_t>(k)] = entries[static_cast<std::size_t>(wrap(k + pos + 1, n))];
    checkAdmissible(rot, n - 1);
    return KupischSeries{Shape::Linear, std::move(rot)};
}

KupischSeries parse(std::string_view text) {
    std::vector<std::int64_t> entries;
    std::size_t k = 0;
    while (k < text.size()) {
        while (k < text.size() && (text[k] == ',' || std::isspace(static_cast<unsigned char>(text[k]))))
            ++k;
        if (k >= text.size()) break;
        std::size_t end = k;
        while (end < text.size() && text[end] != ',' &&
               !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        const std::string_view tok = text.substr(k, end - k);
        std::int64_t value = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || value < 1) {
            fail(Errc::NonPositiveEntry,
                 "token '" + std::string(tok) + "' is not a positive integer");
        }
        entries.push_back(value);
        k = end;
    }
    if (entries.empty()) fail(Errc::EmptyInput, "no entries in input");
    return makeSeries(std::move(entries));
}

std::string render(const KupischSeries& ks) { return joinEntries(ks.c); }

bool isSelfinjective(const KupischSeries& ks) {
    if (ks.n() == 1) return true; // (1) is simple, (m) is truncated polynomial
    if (ks.shape != Shape::Cyclic) return false;
    return std::all_of(ks.c.begin(), ks.c.end(),
                       [&](std::int64_t v) { return v == ks.c[0]; });
}

std::int64_t minEntry(const KupischSeries& ks) {
    return *std::min_element(ks.c.begin(), ks.c.end());
}

KupischSeries rotated(const KupischSeries& ks, std::int64_t offset) {
    const auto n = ks.n();
    std::vector<std::int64_t> out(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = ks.c[static_cast<std::size_t>(wrap(k + offset, n))];
    return KupischSeries{ks.shape, std::move(out)};
}

NormalizedSeries normalize(const KupischSeries& ks) {
    if (ks.shape == Shape::Linear || isSelfinjective(ks))
        return NormalizedSeries{ks, 0};

    // Cyclic non-selfinjective: smallest offset with c_1 = p(A) = c_n - 1.
    const auto n = ks.n();
    const auto p = minEntry(ks);
    for (std::int64_t r = 0; r < n; ++r) {
        if (ks.c[static_cast<std::size_t>(r)] == p &&
            ks.c[static_cast<std::size_t>(wrap(r - 1, n))] == p + 1) {
            return NormalizedSeries{rotated(ks, r), r};
        }
    }
    fail(Errc::NoNormalizedRotation, "no rotation with c_1 = p = c_n - 1 in (" + render(ks) + ")");
}

namespace {

// Least-rotation start index (Booth-style two-pointer scan).
std::int64_t leastRotationIndex(const std::vector<std::int64_t>& s) {
    const auto n = static_cast<std::int64_t>(s.size());
    std::int64_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const auto a = s[static_cast<std::size_t>((i + k) % n)];
        const auto b = s[static_cast<std::size_t>((j + k) % n)];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i = std::max(i + k + 1, j);
        else
            j = std::max(j + k + 1, i);
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

} // namespace

KupischSeries canonicalForm(const KupischSeries& ks) {
    if (ks.shape == Shape::Linear) return ks;
    return rotated(ks, leastRotationIndex(ks.c));
}

} // namespace nakayama
