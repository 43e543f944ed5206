#include "tcorr/seq.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace tcorr {

std::string TernarySeq::to_string() const
{
    std::string out(symbols.size(), '0');
    for (std::size_t i = 0; i < symbols.size(); ++i)
        out[i] = static_cast<char>('0' + symbols[i]);
    return out;
}

TernarySeq m_sequence(const LogTables& field, std::uint32_t g)
{
    if (g == 0 || g >= field.size || std::gcd(field.log[g], field.order) != 1)
        throw std::invalid_argument("m-sequence needs a primitive element, got index " + std::to_string(g));
    TernarySeq s;
    s.symbols.resize(field.order);
    const std::uint64_t step = field.log[g];
    for (std::uint32_t t = 0; t < field.order; ++t)
        s.symbols[t] = field.trace[field.exp[static_cast<std::uint32_t>((step * t) % field.order)]];
    return s;
}

TernarySeq decimate(const TernarySeq& s, std::uint64_t d)
{
    const std::uint64_t n = s.period();
    if (n == 0 || std::gcd(d % n, n) != 1)
        throw std::invalid_argument("decimation " + std::to_string(d) + " is not coprime to period " +
                                    std::to_string(n));
    TernarySeq out;
    out.symbols.resize(n);
    for (std::uint64_t t = 0; t < n; ++t)
        out.symbols[t] = s.symbols[(d % n) * t % n];
    return out;
}

namespace {

void require_equal_periods(const TernarySeq& a, const TernarySeq& b)
{
    if (a.period() != b.period() || a.period() == 0)
        throw std::invalid_argument("cross-correlation needs equal nonzero periods");
}

EisensteinInt correlate_at(const std::uint8_t* a_shifted, const std::uint8_t* b, std::uint32_t n)
{
    std::array<std::int64_t, 3> counts{};
    for (std::uint32_t t = 0; t < n; ++t)
        ++counts[(3 + a_shifted[t] - b[t]) % 3];
    return EisensteinInt::from_counts(counts[0], counts[1], counts[2]);
}

}  // namespace

EisensteinInt cross_correlation(const TernarySeq& a, const TernarySeq& b, std::int64_t tau)
{
    require_equal_periods(a, b);
    const std::int64_t n = a.period();
    const auto shift = static_cast<std::uint32_t>(((tau % n) + n) % n);
    std::array<std::int64_t, 3> counts{};
    for (std::uint32_t t = 0; t < n; ++t)
        ++counts[(3 + a.symbols[(t + shift) % n] - b.symbols[t]) % 3];
    return EisensteinInt::from_counts(counts[0], counts[1], counts[2]);
}

std::vector<EisensteinInt> cross_correlation_all(const TernarySeq& a, const TernarySeq& b)
{
    require_equal_periods(a, b);
    const std::uint32_t n = a.period();
    std::vector<std::uint8_t> doubled(a.symbols);
    doubled.insert(doubled.end(), a.symbols.begin(), a.symbols.end());
    std::vector<EisensteinInt> out(n);
    for (std::uint32_t tau = 0; tau < n; ++tau)
        out[tau] = correlate_at(doubled.data() + tau, b.symbols.data(), n);
    return out;
}

}  // namespace tcorr
