#pragma once

#include "tcorr/eisenstein.hpp"
#include "tcorr/gf.hpp"
#include "tcorr/tower.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace tcorr {

/// Decimation parameters with n = 3r.
struct WeilParams {
    int r = 1;
    int n = 3;
    DecimationCase dcase = DecimationCase::A;
    std::uint64_t d = 5;

    /// Throws std::invalid_argument for r < 1.
    static WeilParams make(int r, DecimationCase dcase);
};

/// Sum over the field of w^{phase(e)}, accumulated as exact phase counts.
EisensteinInt character_sum(const FieldCtx& field, const std::function<std::uint8_t(const Elt&)>& phase);

/// S_d(z) = sum over x of w^{Tr(zx - x^d)} on any table-backed field of
/// characteristic 3. Tr(zx - x^d) is split as Tr(zx) - Tr(x^d).
///
/// The Tr(x^d) table is built once, so repeated evaluation over many z costs
/// one pass of table lookups per z.
class BruteForceWeil {
public:
    BruteForceWeil(const LogTables& field, std::uint64_t d);

    EisensteinInt operator()(std::uint32_t z) const;
    std::uint64_t d() const { return d_; }
    const LogTables& field() const { return *field_; }

private:
    const LogTables* field_;
    std::uint64_t d_;
    std::vector<std::uint8_t> trace_xd_;  // indexed by element
};

EisensteinInt weil_sum_bruteforce(const LogTables& field, std::uint64_t d, std::uint32_t z);
EisensteinInt weil_sum_bruteforce(const TowerCtx& tower, const Coords& z);

struct ReducedOptions {
    /// Replace the inner sum over x1 by the completed-square Gauss-sum form.
    bool gauss_fast_path = false;
};

/// S_d(z) from the subfield-reduced sum: x0 is summed out, leaving
///   3^r * sum_{x2 in M, x1 in F} chi_F(x2 x1^2 + B(x2) x1 + (2z2 + 2z0 - u) x2)
/// with M = {x2 : x2^2 = -z2} and
///   B(x2) = 2z1 - x2^2 + 1  (case A)
///   B(x2) = 2z1 + x2^2 + 2  (case B).
std::int64_t weil_sum_reduced(const TowerCtx& tower, const Coords& z, ReducedOptions opts = {});
std::int64_t weil_sum_reduced(const TowerCtx& tower, const RawCoords& z, ReducedOptions opts = {});

/// sum over x in F of chi_F(a x^2 + b x).
EisensteinInt quadratic_weil_sum(const Elt& a, const Elt& b);

/// sum over x in F of chi_F(x^2).
EisensteinInt gauss_sum(const FieldCtx& field);

/// chi_F(-b^2/a) * eta(a) * G for a != 0.
EisensteinInt quadratic_weil_sum_closed(const Elt& a, const Elt& b);

}  // namespace tcorr
