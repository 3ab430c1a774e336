#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nakayama/kupisch.hpp"

namespace nakayama {

/// Uniserial module with composition factors, top to socle,
/// S_top, S_{top+1}, ..., S_{top+length-1} (indices mod n).
struct SerialModule {
    std::int64_t top = 1;
    std::int64_t length = 1;

    bool operator==(const SerialModule&) const = default;
};

/// Exact homological dimension: Finite(k) or Infinite.
class HomDimension {
public:
    static HomDimension finite(std::int64_t k) {
        HomDimension d;
        d.v_ = k;
        return d;
    }
    static HomDimension infinite() { return HomDimension{}; }

    bool isFinite() const { return v_ >= 0; }
    std::int64_t value() const { return v_; } // meaningful only when finite

    std::string str() const { return isFinite() ? std::to_string(v_) : "inf"; }

    bool operator==(const HomDimension&) const = default;

private:
    std::int64_t v_ = -1;
};

std::int64_t socleIndex(const KupischSeries& ks, SerialModule m);

SerialModule projectiveModule(const KupischSeries& ks, std::int64_t i); // P_i
SerialModule injectiveModule(const KupischSeries& ks, std::int64_t j);  // I(S_j)

/// Kernel of the projective cover P_top ->> M; empty iff M is projective.
std::optional<SerialModule> syzygy(const KupischSeries& ks, SerialModule m);

/// Cokernel of the injective envelope M >-> I(soc M); empty iff M is injective.
std::optional<SerialModule> cosyzygy(const KupischSeries& ks, SerialModule m);

/// d_j: length of the maximal uniserial module with socle S_j.
std::int64_t injectiveLength(const KupischSeries& ks, std::int64_t j);
std::vector<std::int64_t> injectiveLengths(const KupischSeries& ks);

/// Exact dimensions by iterating (co)syzygies with cycle detection over the
/// finite state space of uniserial modules.
HomDimension projDim(const KupischSeries& ks, SerialModule m);
HomDimension injDim(const KupischSeries& ks, SerialModule m);
HomDimension globalDim(const KupischSeries& ks);

/// gamma(S_i) = shifted socle of P_i; psi(S_j) = shifted-back top of I(S_j).
std::int64_t gammaOracle(const KupischSeries& ks, std::int64_t i);
std::int64_t psiOracle(const KupischSeries& ks, std::int64_t j);

/// Definition-level Gorenstein test: id P_i and pd I_j all finite.
bool isGorensteinOracle(const KupischSeries& ks);

} // namespace nakayama
