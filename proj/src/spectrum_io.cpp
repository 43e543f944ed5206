#include "tcorr/spectrum_io.hpp"

#include <limits>
#include <sstream>

namespace tcorr {

nlohmann::json wide_to_json(wide_int v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return to_string(v);
}

nlohmann::json rational_to_json(const Rational& v)
{
    if (v.integral())
        return wide_to_json(v.num());
    return v.to_string();
}

nlohmann::json to_json(const AuditResult& audit)
{
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& m : audit.mismatches)
        mismatches.push_back({{"S", m.s_value},
                              {"C", m.s_value - 1},
                              {"expected", rational_to_json(m.expected)},
                              {"observed", m.observed}});
    return {{"variant", to_string(audit.variant)},
            {"verdict", to_string(audit.verdict)},
            {"integral", audit.integral},
            {"table_total", rational_to_json(audit.table_total)},
            {"domain_size", audit.domain_size},
            {"total_ok", audit.total_ok},
            {"mismatches", mismatches}};
}

nlohmann::json to_json(const ClosedFormTable& table)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : table.entries)
        rows.push_back({{"C_expr", e.c_expr},
                        {"count_expr", e.count_expr},
                        {"C", wide_to_json(e.c_value)},
                        {"S", wide_to_json(e.s_value())},
                        {"count", rational_to_json(e.count)},
                        {"integral", e.count.integral()}});
    return {{"r", table.r},
            {"case", to_string(table.dcase)},
            {"variant", to_string(table.variant)},
            {"entries", rows},
            {"integral", table.integral()},
            {"total", rational_to_json(table.total())},
            {"m1", rational_to_json(table.moment(1))},
            {"m2", rational_to_json(table.moment(2))}};
}

nlohmann::json to_json(const MomentReport& m)
{
    return {{"m1", wide_to_json(m.m1)},
            {"m2", wide_to_json(m.m2)},
            {"expected_m1", wide_to_json(m.expected_m1)},
            {"expected_m2", wide_to_json(m.expected_m2)},
            {"peak_value", m.peak_value},
            {"peak_count", m.peak_count},
            {"expected_peak_count", m.expected_peak_count},
            {"ok", m.ok()}};
}

nlohmann::json to_json(const SpectrumReport& report, const std::optional<AuditResult>& audit, bool include_timing)
{
    nlohmann::json spectrum = nlohmann::json::array();
    for (const auto& [value, count] : report.counts)
        spectrum.push_back({{"S", value}, {"C", value - 1}, {"count", count}});
    nlohmann::json out = {{"r", report.params.r},
                          {"n", report.params.n},
                          {"d", report.params.d},
                          {"case", to_string(report.params.dcase)},
                          {"domain", to_string(report.domain)},
                          {"method", to_string(report.method)},
                          {"spectrum", spectrum},
                          {"moments", {{"m1", wide_to_json(report.m1)}, {"m2", wide_to_json(report.m2)}}}};
    if (audit)
        out["audit"] = to_json(*audit);
    if (include_timing)
        out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

std::string to_csv(const SpectrumReport& report)
{
    std::ostringstream os;
    os << "S,C,count\n";
    for (const auto& [value, count] : report.counts)
        os << value << ',' << value - 1 << ',' << count << '\n';
    return os.str();
}

}  // namespace tcorr
