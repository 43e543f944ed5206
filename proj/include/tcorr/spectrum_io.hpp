#pragma once

#include "tcorr/spectrum.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace tcorr {

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json wide_to_json(wide_int v);
/// Integral rationals as numbers, others as "p/q" strings.
nlohmann::json rational_to_json(const Rational& v);

nlohmann::json to_json(const AuditResult& audit);
nlohmann::json to_json(const ClosedFormTable& table);
nlohmann::json to_json(const MomentReport& moments);

/// Report record:
///   {r, n, d, case, domain, method, spectrum: [{S, C, count}], moments: {m1, m2},
///    audit: {variant, verdict, mismatches, ...}, elapsed_ms}
/// audit is present when given; elapsed_ms only when include_timing is set,
/// so that the default output is byte-reproducible.
nlohmann::json to_json(const SpectrumReport& report, const std::optional<AuditResult>& audit = std::nullopt,
                       bool include_timing = false);

/// "S,C,count" header followed by one row per value, ascending S.
std::string to_csv(const SpectrumReport& report);

}  // namespace tcorr
