#include "tcorr/spectrum.hpp"

#include "tcorr/parallel.hpp"
#include "tcorr/seq.hpp"

#include <array>
#include <chrono>
#include <set>

namespace tcorr {

std::string_view to_string(Domain v) { return v == Domain::E ? "E" : "E_star"; }

std::string_view to_string(Method v)
{
    switch (v) {
    case Method::brute: return "brute";
    case Method::reduced: return "reduced";
    case Method::sequence: return "sequence";
    }
    return "?";
}

std::string_view to_string(TableVariant v) { return v == TableVariant::paper ? "paper" : "moment_consistent"; }

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::table_inconsistent: return "table_inconsistent";
    }
    return "?";
}

Domain parse_domain(std::string_view s)
{
    if (s == "E")
        return Domain::E;
    if (s == "E_star")
        return Domain::E_star;
    throw std::invalid_argument("unknown domain '" + std::string(s) + "'");
}

Method parse_method(std::string_view s)
{
    if (s == "brute")
        return Method::brute;
    if (s == "reduced")
        return Method::reduced;
    if (s == "sequence")
        return Method::sequence;
    throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

TableVariant parse_variant(std::string_view s)
{
    if (s == "paper")
        return TableVariant::paper;
    if (s == "moment_consistent")
        return TableVariant::moment_consistent;
    throw std::invalid_argument("unknown table variant '" + std::string(s) + "'");
}

int max_r(Method m) { return m == Method::reduced ? 4 : 3; }

std::uint64_t SpectrumReport::total() const
{
    std::uint64_t t = 0;
    for (const auto& [value, count] : counts)
        t += count;
    return t;
}

namespace {

void tally(SpectrumReport& report)
{
    report.counts.clear();
    report.m1 = 0;
    report.m2 = 0;
    const std::size_t first = report.domain == Domain::E ? 0 : 1;
    for (std::size_t z = first; z < report.values.size(); ++z)
        ++report.counts[report.values[z]];
    for (const auto& [value, count] : report.counts) {
        report.m1 += static_cast<wide_int>(value) * count;
        report.m2 += static_cast<wide_int>(value) * value * count;
    }
}

void check_limit(int r, Method method)
{
    if (r < 1 || r > max_r(method))
        throw std::invalid_argument("method " + std::string(to_string(method)) + " supports 1 <= r <= " +
                                    std::to_string(max_r(method)) + ", got r=" + std::to_string(r));
}

}  // namespace

SpectrumReport full_spectrum(const TowerCtx& tower, Method method, Domain domain, const SpectrumOptions& opts)
{
    check_limit(tower.r(), method);
    const auto start = std::chrono::steady_clock::now();

    SpectrumReport report;
    report.params = WeilParams::make(tower.r(), tower.decimation_case());
    report.domain = domain;
    report.method = method;
    report.values.assign(tower.size(), 0);
    auto& values = report.values;

    switch (method) {
    case Method::brute: {
        const BruteForceWeil weil(tower.tables(), tower.d());
        detail::parallel_blocks(
            tower.size(), opts.workers,
            [&](std::uint64_t begin, std::uint64_t end) {
                for (auto z = begin; z < end; ++z)
                    values[z] = weil(static_cast<std::uint32_t>(z)).as_integer();
            },
            opts.progress);
        break;
    }
    case Method::reduced: {
        detail::parallel_blocks(
            tower.size(), opts.workers,
            [&](std::uint64_t begin, std::uint64_t end) {
                for (auto z = begin; z < end; ++z)
                    values[z] = weil_sum_reduced(tower, tower.unpack(static_cast<std::uint32_t>(z)), opts.reduced);
            },
            opts.progress);
        break;
    }
    case Method::sequence: {
        const LogTables& t = tower.tables();
        const TernarySeq a = m_sequence(t, t.generator);
        const TernarySeq b = decimate(a, tower.d());
        const std::uint32_t n = a.period();
        std::vector<std::uint8_t> doubled(a.symbols);
        doubled.insert(doubled.end(), a.symbols.begin(), a.symbols.end());
        // C_d(g^tau) + 1 = S_d(g^tau); z = 0 is not a shift and S_d(0) = 0.
        values[0] = 0;
        detail::parallel_blocks(
            n, opts.workers,
            [&](std::uint64_t begin, std::uint64_t end) {
                for (auto tau = begin; tau < end; ++tau) {
                    std::array<std::int64_t, 3> counts{};
                    const std::uint8_t* shifted = doubled.data() + tau;
                    for (std::uint32_t i = 0; i < n; ++i)
                        ++counts[(3 + shifted[i] - b.symbols[i]) % 3];
                    const auto c = EisensteinInt::from_counts(counts[0], counts[1], counts[2]);
                    values[t.exp[tau]] = c.as_integer() + 1;
                }
            },
            opts.progress);
        break;
    }
    }

    tally(report);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SpectrumReport full_spectrum(const WeilParams& params, Method method, Domain domain, const SpectrumOptions& opts)
{
    check_limit(params.r, method);
    const auto tower = build_tower(build_field(params.r), params.dcase);
    return full_spectrum(*tower, method, domain, opts);
}

SpectrumReport flat_field_spectrum(const WeilParams& params, Domain domain, const SpectrumOptions& opts)
{
    check_limit(params.r, Method::brute);
    const auto start = std::chrono::steady_clock::now();
    const auto field = build_field(params.n);
    const BruteForceWeil weil(field->tables(), params.d);

    SpectrumReport report;
    report.params = params;
    report.domain = domain;
    report.method = Method::brute;
    report.values.assign(field->size(), 0);
    detail::parallel_blocks(
        field->size(), opts.workers,
        [&](std::uint64_t begin, std::uint64_t end) {
            for (auto z = begin; z < end; ++z)
                report.values[z] = weil(static_cast<std::uint32_t>(z)).as_integer();
        },
        opts.progress);
    // Flat index 0 is also the zero element, so the domain filter carries over.
    tally(report);
    report.values.clear();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::int64_t first_pointwise_difference(const SpectrumReport& a, const SpectrumReport& b)
{
    if (a.values.empty() || a.values.size() != b.values.size())
        throw std::invalid_argument("reports are not pointwise comparable");
    for (std::size_t z = 0; z < a.values.size(); ++z)
        if (a.values[z] != b.values[z])
            return static_cast<std::int64_t>(z);
    return -1;
}

std::vector<std::int64_t> admissible_values(int r)
{
    const auto peak = static_cast<std::int64_t>(pow3(2 * r));
    if (r % 2 == 1) {
        const auto h = static_cast<std::int64_t>(pow3((3 * r + 1) / 2));
        if (h == peak)  // r = 1
            return {-h, 0, h};
        return {-h, 0, h, peak};
    }
    const auto h = static_cast<std::int64_t>(pow3(3 * r / 2));
    return {-2 * h, -h, 0, h, 2 * h, peak};
}

bool values_admissible(const SpectrumReport& report)
{
    const auto allowed = admissible_values(report.params.r);
    const std::set<std::int64_t> ok(allowed.begin(), allowed.end());
    for (const auto& [value, count] : report.counts)
        if (!ok.contains(value))
            return false;
    return true;
}

bool ClosedFormTable::integral() const
{
    for (const auto& e : entries)
        if (!e.count.integral())
            return false;
    return true;
}

Rational ClosedFormTable::total() const
{
    Rational t;
    for (const auto& e : entries)
        t = t + e.count;
    return t;
}

Rational ClosedFormTable::moment(int k) const
{
    Rational m;
    for (const auto& e : entries) {
        wide_int p = 1;
        for (int i = 0; i < k; ++i)
            p *= e.s_value();
        m = m + Rational(p) * e.count;
    }
    return m;
}

std::map<wide_int, Rational> ClosedFormTable::by_s_value() const
{
    std::map<wide_int, Rational> out;
    for (const auto& e : entries)
        out[e.s_value()] = out[e.s_value()] + e.count;
    return out;
}

ClosedFormTable closed_form_table(int r, DecimationCase dcase, TableVariant variant)
{
    if (r < 1)
        throw std::invalid_argument("r must be >= 1");
    ClosedFormTable table;
    table.r = r;
    table.dcase = dcase;
    table.variant = variant;

    const wide_int p3r = wide_pow3(3 * r);
    const wide_int p2r = wide_pow3(2 * r);
    const wide_int pr = wide_pow3(r);
    const wide_int hi = wide_pow3(3 * r - 1);
    const wide_int lo = wide_pow3(2 * r - 1);
    const bool paper = variant == TableVariant::paper;
    const wide_int numer = paper ? hi + lo : hi - lo;
    const std::string numer_expr = paper ? "3^{3r-1}+3^{2r-1}" : "3^{3r-1}-3^{2r-1}";
    auto& rows = table.entries;

    if (r % 2 == 0) {
        const wide_int h = wide_pow3(3 * r / 2);
        rows.push_back({"-1", "(3^{3r}+3^{2r})/2-3^r", -1, Rational(p3r + p2r, 2) + Rational(-pr)});
        rows.push_back({"3^{2r}-1", "3^r", p2r - 1, Rational(pr)});
        rows.push_back({"3^{3r/2}-1", "(" + numer_expr + ")/2", h - 1, Rational(numer, 2)});
        rows.push_back({"-3^{3r/2}-1", "(" + numer_expr + ")/2", -h - 1, Rational(numer, 2)});
        rows.push_back({"2*3^{3r/2}-1", "(" + numer_expr + ")/4", 2 * h - 1, Rational(numer, 4)});
        rows.push_back({"-2*3^{3r/2}-1", "(" + numer_expr + ")/4", -2 * h - 1, Rational(numer, 4)});
    } else {
        const wide_int h = wide_pow3((3 * r + 1) / 2);
        rows.push_back({"-1", "2*3^{3r-1}+3^{2r-1}-3^r", -1, Rational(2 * hi + lo - pr)});
        rows.push_back({"3^{2r}-1", "3^r", p2r - 1, Rational(pr)});
        rows.push_back({"3^{(3r+1)/2}-1", "(" + numer_expr + ")/2", h - 1, Rational(numer, 2)});
        rows.push_back({"-3^{(3r+1)/2}-1", "(" + numer_expr + ")/2", -h - 1, Rational(numer, 2)});
    }
    return table;
}

AuditResult audit(const SpectrumReport& report, const ClosedFormTable& table)
{
    if (report.params.r != table.r || report.params.dcase != table.dcase)
        throw std::invalid_argument("audit needs matching r and decimation case");
    AuditResult result;
    result.variant = table.variant;
    result.integral = table.integral();
    result.table_total = table.total();
    result.domain_size = pow3(report.params.n) - (report.domain == Domain::E ? 0 : 1);
    result.total_ok = result.table_total == Rational(static_cast<wide_int>(result.domain_size));
    if (!result.integral) {
        result.verdict = Verdict::table_inconsistent;
        return result;
    }

    const auto expected = table.by_s_value();
    std::set<wide_int> keys;
    for (const auto& [s, count] : expected)
        keys.insert(s);
    for (const auto& [s, count] : report.counts)
        keys.insert(s);
    for (const wide_int s : keys) {
        const auto e = expected.find(s);
        const Rational want = e == expected.end() ? Rational(0) : e->second;
        const auto o = report.counts.find(narrow_i64(s));
        const std::uint64_t got = o == report.counts.end() ? 0 : o->second;
        if (want != Rational(static_cast<wide_int>(got)))
            result.mismatches.push_back({narrow_i64(s), want, got});
    }
    result.verdict = result.total_ok && result.mismatches.empty() ? Verdict::match : Verdict::mismatch;
    return result;
}

MomentReport moment_check(const SpectrumReport& report)
{
    MomentReport m;
    const int r = report.params.r;
    m.m1 = report.m1;
    m.m2 = report.m2;
    m.expected_m1 = wide_pow3(report.params.n);
    m.expected_m2 = wide_pow3(2 * report.params.n);
    m.peak_value = static_cast<std::int64_t>(pow3(2 * r));
    const auto it = report.counts.find(m.peak_value);
    m.peak_count = it == report.counts.end() ? 0 : it->second;
    m.expected_peak_count = pow3(r);
    if (r == 1) {
        // 3^{2r} = 3^{(3r+1)/2} here, so the peak shares its value with another row.
        const auto merged = closed_form_table(r, report.params.dcase, TableVariant::moment_consistent).by_s_value();
        m.expected_peak_count = static_cast<std::uint64_t>(narrow_i64(merged.at(m.peak_value).num()));
    }
    m.m1_ok = m.m1 == m.expected_m1;
    m.m2_ok = m.m2 == m.expected_m2;
    m.peak_ok = m.peak_count == m.expected_peak_count;
    return m;
}

}  // namespace tcorr
