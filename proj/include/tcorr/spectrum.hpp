#pragma once

#include "tcorr/charsum.hpp"
#include "tcorr/numeric.hpp"
#include "tcorr/tower.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tcorr {

/// E: all z in GF(3^n). E_star: z != 0, i.e. the shifts tau in Z/(3^n - 1).
enum class Domain { E, E_star };
enum class Method { brute, reduced, sequence };
enum class TableVariant { paper, moment_consistent };
enum class Verdict { match, mismatch, table_inconsistent };

std::string_view to_string(Domain v);
std::string_view to_string(Method v);
std::string_view to_string(TableVariant v);
std::string_view to_string(Verdict v);
Domain parse_domain(std::string_view s);
Method parse_method(std::string_view s);
TableVariant parse_variant(std::string_view s);

/// Largest r each method accepts.
int max_r(Method m);

struct SpectrumOptions {
    unsigned workers = 1;
    ReducedOptions reduced;
    /// Called with (done, total) as blocks of z finish; may be empty.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct SpectrumReport {
    WeilParams params;
    Domain domain = Domain::E;
    Method method = Method::brute;
    std::map<std::int64_t, std::uint64_t> counts;  // S value -> occurrences
    wide_int m1 = 0;                               // sum of S
    wide_int m2 = 0;                               // sum of S^2
    double elapsed_ms = 0.0;
    /// S_d(z) for every z in E, indexed by packed tower index (index 0 is z = 0).
    /// Empty for reports without a tower correspondence.
    std::vector<std::int64_t> values;

    std::uint64_t total() const;
};

/// Exact multiset of S_d(z) over the domain. The sequence method derives
/// S = C + 1 on z = g^tau and uses S_d(0) = 0 for z = 0.
/// Throws std::invalid_argument when r exceeds max_r(method).
SpectrumReport full_spectrum(const TowerCtx& tower, Method method, Domain domain, const SpectrumOptions& opts = {});
SpectrumReport full_spectrum(const WeilParams& params, Method method, Domain domain,
                             const SpectrumOptions& opts = {});

/// Brute force on the flat field GF(3)[y]/(g) of degree n. Shares nothing
/// with the tower, so only the multiset is comparable. method is reported as
/// brute and values stays empty.
SpectrumReport flat_field_spectrum(const WeilParams& params, Domain domain, const SpectrumOptions& opts = {});

/// First pointwise disagreement between two reports with tower values, or -1.
std::int64_t first_pointwise_difference(const SpectrumReport& a, const SpectrumReport& b);

/// The S values the parity of r allows:
///   r odd:  0, 3^{2r}, +-3^{(3r+1)/2}
///   r even: 0, 3^{2r}, +-3^{3r/2}, +-2*3^{3r/2}
std::vector<std::int64_t> admissible_values(int r);
bool values_admissible(const SpectrumReport& report);

struct TableEntry {
    std::string c_expr;
    std::string count_expr;
    wide_int c_value = 0;
    Rational count;

    wide_int s_value() const { return c_value + 1; }
};

/// Correlation distribution in closed form, rows in printed order. Rows with
/// coinciding values (r = 1) are kept separate; by_s_value merges them.
struct ClosedFormTable {
    int r = 1;
    DecimationCase dcase = DecimationCase::A;
    TableVariant variant = TableVariant::moment_consistent;
    std::vector<TableEntry> entries;

    bool integral() const;
    Rational total() const;
    /// sum of S^k * count, S = C + 1.
    Rational moment(int k) const;
    std::map<wide_int, Rational> by_s_value() const;
};

/// paper: the published rows. moment_consistent: the +-rows use numerator
/// 3^{3r-1} - 3^{2r-1} and counts are over domain E.
ClosedFormTable closed_form_table(int r, DecimationCase dcase, TableVariant variant);

struct AuditMismatch {
    std::int64_t s_value = 0;
    Rational expected;
    std::uint64_t observed = 0;
};

struct AuditResult {
    TableVariant variant = TableVariant::moment_consistent;
    Verdict verdict = Verdict::mismatch;
    bool integral = true;
    Rational table_total;
    std::uint64_t domain_size = 0;
    bool total_ok = false;
    std::vector<AuditMismatch> mismatches;
};

/// Compares a computed spectrum with a table. Non-integral tables are
/// reported table_inconsistent without value comparison.
AuditResult audit(const SpectrumReport& report, const ClosedFormTable& table);

struct MomentReport {
    wide_int m1 = 0, m2 = 0;
    wide_int expected_m1 = 0, expected_m2 = 0;
    std::int64_t peak_value = 0;  // 3^{2r}
    std::uint64_t peak_count = 0;
    std::uint64_t expected_peak_count = 0;  // 3^r
    bool m1_ok = false, m2_ok = false, peak_ok = false;

    bool ok() const { return m1_ok && m2_ok && peak_ok; }
};

/// m1 = 3^n, m2 = 3^{2n}, and 3^{2r} occurring 3^r times. Since S_d(0) = 0
/// the same identities hold on E_star.
MomentReport moment_check(const SpectrumReport& report);

}  // namespace tcorr
