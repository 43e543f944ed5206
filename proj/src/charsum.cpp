#include "tcorr/charsum.hpp"

#include "tcorr/numeric.hpp"

#include <array>
#include <numeric>
#include <string>

namespace tcorr {

WeilParams WeilParams::make(int r, DecimationCase dcase)
{
    if (r < 1)
        throw std::invalid_argument("r must be >= 1, got " + std::to_string(r));
    return {r, 3 * r, dcase, decimation_exponent(r, dcase)};
}

EisensteinInt character_sum(const FieldCtx& field, const std::function<std::uint8_t(const Elt&)>& phase)
{
    std::array<std::int64_t, 3> counts{};
    for (std::uint32_t idx = 0; idx < field.size(); ++idx)
        ++counts[phase(field.element(idx)) % 3];
    return EisensteinInt::from_counts(counts[0], counts[1], counts[2]);
}

BruteForceWeil::BruteForceWeil(const LogTables& field, std::uint64_t d) : field_(&field), d_(d)
{
    if (std::gcd(d, static_cast<std::uint64_t>(field.order)) != 1)
        throw std::invalid_argument("exponent " + std::to_string(d) + " does not permute the field");
    trace_xd_.resize(field.size);
    for (std::uint32_t x = 0; x < field.size; ++x)
        trace_xd_[x] = field.trace[field.pow(x, d)];
}

EisensteinInt BruteForceWeil::operator()(std::uint32_t z) const
{
    const LogTables& f = *field_;
    if (z >= f.size)
        throw std::invalid_argument("element index out of range");
    // Phase 0 contributes +1, phase 1 contributes w, phase 2 contributes w^2.
    std::array<std::int64_t, 3> counts{};
    if (z == 0) {
        for (std::uint32_t x = 0; x < f.size; ++x)
            ++counts[(3 - trace_xd_[x]) % 3];
    } else {
        const std::uint32_t lz = f.log[z];
        ++counts[(3 - trace_xd_[0]) % 3];
        const std::uint32_t* exp = f.exp.data() + lz;
        const std::uint32_t* log = f.log.data();
        const std::uint8_t* tr = f.trace.data();
        const std::uint8_t* txd = trace_xd_.data();
        for (std::uint32_t x = 1; x < f.size; ++x)
            ++counts[(3 + tr[exp[log[x]]] - txd[x]) % 3];
    }
    return EisensteinInt::from_counts(counts[0], counts[1], counts[2]);
}

EisensteinInt weil_sum_bruteforce(const LogTables& field, std::uint64_t d, std::uint32_t z)
{
    return BruteForceWeil(field, d)(z);
}

EisensteinInt weil_sum_bruteforce(const TowerCtx& tower, const Coords& z)
{
    return weil_sum_bruteforce(tower.tables(), tower.d(), tower.from_coords(z));
}

EisensteinInt quadratic_weil_sum(const Elt& a, const Elt& b)
{
    const FieldCtx& f = a.field();
    return character_sum(f, [&](const Elt& x) { return f.abs_trace((a * x * x + b * x).index()); });
}

EisensteinInt gauss_sum(const FieldCtx& field) { return quadratic_weil_sum(field.one(), field.zero()); }

EisensteinInt quadratic_weil_sum_closed(const Elt& a, const Elt& b)
{
    if (a.is_zero())
        throw std::invalid_argument("completed-square form needs a != 0");
    const FieldCtx& f = a.field();
    // a x^2 + b x = a (x + b/(2a))^2 - b^2/(4a), and 4 = 1 in characteristic 3.
    const Elt shift = -(b * b * a.inv());
    const EisensteinInt phase = EisensteinInt::omega_pow(f.abs_trace(shift.index()));
    return static_cast<std::int64_t>(quadratic_character(a)) * (phase * gauss_sum(f));
}

std::int64_t weil_sum_reduced(const TowerCtx& tower, const RawCoords& z, ReducedOptions opts)
{
    const FieldCtx& f = tower.base();
    const std::uint32_t z0 = z[0], z1 = z[1], z2 = z[2];
    const std::uint32_t two = 2;
    const bool case_a = tower.decimation_case() == DecimationCase::A;
    const std::uint32_t two_z1 = f.mul(two, z1);
    const std::uint32_t lin_coeff = f.sub(f.add(f.mul(two, z2), f.mul(two, z0)), tower.u().index());

    EisensteinInt total{};
    for (const Elt& root : sqrt_set(f.element(f.neg(z2)))) {
        const std::uint32_t x2 = root.index();
        const std::uint32_t x2sq = f.mul(x2, x2);
        const std::uint32_t b = case_a ? f.add(f.sub(two_z1, x2sq), 1) : f.add(f.add(two_z1, x2sq), two);
        const std::uint32_t constant = f.mul(lin_coeff, x2);
        EisensteinInt inner;
        if (opts.gauss_fast_path) {
            const EisensteinInt lead = EisensteinInt::omega_pow(f.abs_trace(constant));
            if (x2 == 0)
                inner = b == 0 ? EisensteinInt{static_cast<std::int64_t>(f.size()), 0} : EisensteinInt{};
            else
                inner = quadratic_weil_sum_closed(root, f.element(b));
            inner = lead * inner;
        } else {
            std::array<std::int64_t, 3> counts{};
            for (std::uint32_t x1 = 0; x1 < f.size(); ++x1) {
                std::uint32_t arg = f.mul(x2, f.mul(x1, x1));
                arg = f.add(arg, f.mul(b, x1));
                arg = f.add(arg, constant);
                ++counts[f.abs_trace(arg)];
            }
            inner = EisensteinInt::from_counts(counts[0], counts[1], counts[2]);
        }
        total = total + inner;
    }
    return static_cast<std::int64_t>(f.size()) * total.as_integer();
}

std::int64_t weil_sum_reduced(const TowerCtx& tower, const Coords& z, ReducedOptions opts)
{
    return weil_sum_reduced(tower, RawCoords{tower.unpack(tower.from_coords(z))}, opts);
}

}  // namespace tcorr
