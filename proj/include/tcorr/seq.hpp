#pragma once

#include "tcorr/eisenstein.hpp"
#include "tcorr/gf.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tcorr {

/// One period of a ternary sequence.
struct TernarySeq {
    std::vector<std::uint8_t> symbols;

    std::uint32_t period() const { return static_cast<std::uint32_t>(symbols.size()); }
    /// Digits concatenated on one line, e.g. "0121...".
    std::string to_string() const;
};

/// a_t = Tr(g^t) for t in [0, 3^m - 1). g must be primitive.
TernarySeq m_sequence(const LogTables& field, std::uint32_t g);

/// b_t = a_{d t mod N}; requires gcd(d, N) = 1.
TernarySeq decimate(const TernarySeq& s, std::uint64_t d);

/// C_{a,b}(tau) = sum_t w^{a_{t+tau} - b_t}, indices mod N. tau may be negative.
EisensteinInt cross_correlation(const TernarySeq& a, const TernarySeq& b, std::int64_t tau);

/// All N values C_{a,b}(0..N-1).
std::vector<EisensteinInt> cross_correlation_all(const TernarySeq& a, const TernarySeq& b);

}  // namespace tcorr
