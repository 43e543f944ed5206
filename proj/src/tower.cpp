#include "tcorr/tower.hpp"

#include "tcorr/numeric.hpp"

#include <numeric>
#include <string>

namespace tcorr {

std::string_view to_string(DecimationCase c) { return c == DecimationCase::A ? "A" : "B"; }

DecimationCase parse_decimation_case(std::string_view text)
{
    if (text == "A" || text == "a")
        return DecimationCase::A;
    if (text == "B" || text == "b")
        return DecimationCase::B;
    throw std::invalid_argument("unknown decimation case '" + std::string(text) + "'");
}

std::uint64_t decimation_exponent(int r, DecimationCase c)
{
    return (c == DecimationCase::A ? pow3(r) : pow3(2 * r)) + 2;
}

Elt find_u(const FieldCtx& base, DecimationCase c)
{
    const Elt one = base.one();
    for (std::uint32_t idx = 0; idx < base.size(); ++idx) {
        const Elt u = base.element(idx);
        const Elt arg = c == DecimationCase::A ? u - one : one - u;
        if (trace(arg, 1) == one)
            return u;
    }
    // Trace is onto GF(3), so the loop always returns.
    throw std::logic_error("no element with the required trace");
}

bool artin_schreier_has_root(const Elt& c)
{
    const FieldCtx& f = c.field();
    for (std::uint32_t idx = 0; idx < f.size(); ++idx) {
        const Elt y = f.element(idx);
        if (y * y * y - y == c)
            return true;
    }
    return false;
}

RawCoords TowerCtx::mul(const RawCoords& a, const RawCoords& b) const
{
    const FieldCtx& f = *base_;
    const auto m = [&](std::uint32_t x, std::uint32_t y) { return f.mul(x, y); };
    const auto s = [&](std::uint32_t x, std::uint32_t y) { return f.add(x, y); };
    const std::uint32_t p0 = m(a[0], b[0]);
    const std::uint32_t p1 = s(m(a[0], b[1]), m(a[1], b[0]));
    const std::uint32_t p2 = s(s(m(a[0], b[2]), m(a[1], b[1])), m(a[2], b[0]));
    const std::uint32_t p3 = s(m(a[1], b[2]), m(a[2], b[1]));
    const std::uint32_t p4 = m(a[2], b[2]);
    // alpha^3 = alpha + c, alpha^4 = alpha^2 + c*alpha
    return {s(p0, m(c_, p3)), s(s(p1, p3), m(c_, p4)), s(p2, p4)};
}

RawCoords TowerCtx::add(const RawCoords& a, const RawCoords& b) const
{
    const FieldCtx& f = *base_;
    return {f.add(a[0], b[0]), f.add(a[1], b[1]), f.add(a[2], b[2])};
}

RawCoords TowerCtx::pow(RawCoords a, std::uint64_t k) const
{
    RawCoords result{1, 0, 0};
    while (k) {
        if (k & 1)
            result = mul(result, a);
        a = mul(a, a);
        k >>= 1;
    }
    return result;
}

std::uint32_t TowerCtx::from_coords(const Coords& x) const
{
    for (const Elt* e : {&x.x0, &x.x1, &x.x2})
        if (&e->field() != base_.get())
            throw std::invalid_argument("coordinates do not belong to the tower's subfield");
    return pack({x.x0.index(), x.x1.index(), x.x2.index()});
}

Coords TowerCtx::coords(std::uint32_t packed) const
{
    if (packed >= tables_.size)
        throw std::invalid_argument("tower element index " + std::to_string(packed) + " out of range");
    const RawCoords raw = unpack(packed);
    return {base_->element(raw[0]), base_->element(raw[1]), base_->element(raw[2])};
}

Elt TowerCtx::rel_trace(std::uint32_t packed) const
{
    const std::uint64_t q = q_;
    std::uint32_t acc = packed;
    acc = add(acc, tables_.pow(packed, q));
    acc = add(acc, tables_.pow(packed, q * q));
    const RawCoords raw = unpack(acc);
    if (raw[1] != 0 || raw[2] != 0)
        throw std::logic_error("relative trace left the subfield");
    return base_->element(raw[0]);
}

std::shared_ptr<const TowerCtx> build_tower(std::shared_ptr<const FieldCtx> base, DecimationCase dcase)
{
    if (!base)
        throw std::invalid_argument("null subfield");
    const int r = base->degree();
    if (r > kMaxTowerDegree)
        throw std::invalid_argument("tower needs subfield degree <= " + std::to_string(kMaxTowerDegree) + ", got " +
                                    std::to_string(r));

    std::shared_ptr<TowerCtx> ctx(new TowerCtx());
    ctx->base_ = base;
    ctx->case_ = dcase;
    ctx->d_ = decimation_exponent(r, dcase);
    ctx->q_ = base->size();

    const Elt one = base->one();
    const Elt u = find_u(*base, dcase);
    const Elt shift = dcase == DecimationCase::A ? u - one : one - u;
    const Elt c = shift * shift * shift;
    ctx->u_ = u.index();
    ctx->c_ = c.index();

    TowerChecks& chk = ctx->checks_;
    chk.trace_condition = trace(shift, 1) == one;
    chk.cubic_has_no_root = !artin_schreier_has_root(c);

    LogTables& t = ctx->tables_;
    const std::uint64_t size = pow3(3 * r);
    t.size = static_cast<std::uint32_t>(size);
    t.order = t.size - 1;
    chk.exponent_coprime = std::gcd(ctx->d_, static_cast<std::uint64_t>(t.order)) == 1;

    RawCoords alpha_q{0, 1, 0};
    for (int i = 0; i < r; ++i)
        alpha_q = ctx->pow(alpha_q, 3);
    chk.frobenius_shift = alpha_q == RawCoords{1, 1, 0};

    const auto primes = prime_divisors(t.order);
    std::uint32_t gen = 0;
    for (std::uint32_t idx = 1; idx < t.size && gen == 0; ++idx) {
        const RawCoords cand = ctx->unpack(idx);
        bool full = true;
        for (auto p : primes) {
            if (ctx->pow(cand, t.order / p) == RawCoords{1, 0, 0}) {
                full = false;
                break;
            }
        }
        if (full)
            gen = idx;
    }
    t.generator = gen;

    t.exp.assign(2 * static_cast<std::size_t>(t.order), 0);
    t.log.assign(t.size, 0);
    std::vector<bool> seen(t.size, false);
    bool cycle_ok = gen != 0;
    RawCoords cur{1, 0, 0};
    const RawCoords g = ctx->unpack(gen);
    for (std::uint32_t k = 0; k < t.order && cycle_ok; ++k) {
        const std::uint32_t packed = ctx->pack(cur);
        if (seen[packed]) {
            cycle_ok = false;
            break;
        }
        seen[packed] = true;
        t.exp[k] = packed;
        t.exp[k + t.order] = packed;
        t.log[packed] = k;
        cur = ctx->mul(cur, g);
    }
    chk.generator_primitive = cycle_ok && ctx->pack(cur) == 1;

    if (!chk.all())
        throw std::logic_error("tower construction self-check failed for r=" + std::to_string(r) + ", case " +
                               std::string(to_string(dcase)));

    // Absolute trace on the GF(3)-basis y^j alpha^i by repeated cubing; the
    // rest follows by linearity.
    const int n = 3 * r;
    std::vector<std::uint8_t> basis_trace(static_cast<std::size_t>(n));
    std::uint32_t place = 1;
    for (int i = 0; i < n; ++i, place *= 3) {
        RawCoords term = ctx->unpack(place);
        RawCoords acc{0, 0, 0};
        for (int k = 0; k < n; ++k) {
            acc = ctx->add(acc, term);
            term = ctx->pow(term, 3);
        }
        const std::uint32_t packed = ctx->pack(acc);
        if (packed > 2)
            throw std::logic_error("absolute trace of a basis element left GF(3)");
        basis_trace[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(packed);
    }
    t.trace.resize(t.size);
    for (std::uint32_t a = 0; a < t.size; ++a) {
        std::uint32_t rest = a;
        int acc = 0;
        for (int i = 0; i < n; ++i) {
            acc += static_cast<int>(rest % 3) * basis_trace[static_cast<std::size_t>(i)];
            rest /= 3;
        }
        t.trace[a] = static_cast<std::uint8_t>(acc % 3);
    }
    return ctx;
}

Coords frobenius_coords(const Coords& x)
{
    // x0 + x1(alpha + 1) + x2(alpha + 1)^2 = (x0 + x1 + x2) + (x1 + 2x2)alpha + x2 alpha^2
    const Elt two = x.x0.field().from_int(2);
    return {x.x0 + x.x1 + x.x2, x.x1 + two * x.x2, x.x2};
}

namespace {

RawCoords raw_of(const Coords& x) { return {x.x0.index(), x.x1.index(), x.x2.index()}; }

void check_coords(const TowerCtx& tower, const Coords& x)
{
    for (const Elt* e : {&x.x0, &x.x1, &x.x2})
        if (&e->field() != &tower.base())
            throw std::invalid_argument("coordinates do not belong to the tower's subfield");
}

}  // namespace

std::uint32_t rel_trace_xd(const TowerCtx& tower, const RawCoords& x)
{
    if (tower.decimation_case() != DecimationCase::A)
        throw std::invalid_argument("relative trace form of x^d is only available for d = 3^r + 2");
    const FieldCtx& f = tower.base();
    const std::uint32_t x0 = x[0], x1 = x[1], x2 = x[2];
    const std::uint32_t two = 2;
    const std::uint32_t x2sq = f.mul(x2, x2);
    const std::uint32_t x1sq = f.mul(x1, x1);
    // ((u-1)^3 + 1)x2^3 + x2^2 x1 + x2^2 x0 + 2 x2 x1^2 + 2 x1^3
    std::uint32_t acc = f.mul(f.add(tower.c().index(), 1), f.mul(x2sq, x2));
    acc = f.add(acc, f.mul(x2sq, x1));
    acc = f.add(acc, f.mul(x2sq, x0));
    acc = f.add(acc, f.mul(two, f.mul(x2, x1sq)));
    acc = f.add(acc, f.mul(two, f.mul(x1sq, x1)));
    return acc;
}

Elt rel_trace_xd(const TowerCtx& tower, const Coords& x)
{
    check_coords(tower, x);
    return tower.base().element(rel_trace_xd(tower, raw_of(x)));
}

std::uint32_t rel_trace_zx(const TowerCtx& tower, const RawCoords& z, const RawCoords& x)
{
    const FieldCtx& f = tower.base();
    const std::uint32_t two = 2;
    std::uint32_t acc = f.mul(two, f.mul(f.add(z[2], z[0]), x[2]));
    acc = f.add(acc, f.mul(two, f.mul(z[1], x[1])));
    acc = f.add(acc, f.mul(two, f.mul(z[2], x[0])));
    return acc;
}

Elt rel_trace_zx(const TowerCtx& tower, const Coords& z, const Coords& x)
{
    check_coords(tower, z);
    check_coords(tower, x);
    return tower.base().element(rel_trace_zx(tower, raw_of(z), raw_of(x)));
}

std::uint8_t abs_trace_xd(const TowerCtx& tower, const RawCoords& x)
{
    const FieldCtx& f = tower.base();
    const std::uint32_t x0 = x[0], x1 = x[1], x2 = x[2];
    const std::uint32_t two = 2;
    const std::uint32_t x2sq = f.mul(x2, x2);
    std::uint32_t acc;
    if (tower.decimation_case() == DecimationCase::A) {
        // x2^2 x1 + x2^2 x0 + 2 x2 x1^2 + u x2 + 2 x1
        acc = f.mul(x2sq, x1);
        acc = f.add(acc, f.mul(x2sq, x0));
        acc = f.add(acc, f.mul(two, f.mul(x2, f.mul(x1, x1))));
        acc = f.add(acc, f.mul(tower.u().index(), x2));
        acc = f.add(acc, f.mul(two, x1));
    } else {
        // 2 x2^2 x1 + x2^2 x0 + 2 x2 x1^2 + u x2 + x1
        acc = f.mul(two, f.mul(x2sq, x1));
        acc = f.add(acc, f.mul(x2sq, x0));
        acc = f.add(acc, f.mul(two, f.mul(x2, f.mul(x1, x1))));
        acc = f.add(acc, f.mul(tower.u().index(), x2));
        acc = f.add(acc, x1);
    }
    return f.abs_trace(acc);
}

std::uint8_t abs_trace_xd(const TowerCtx& tower, const Coords& x)
{
    check_coords(tower, x);
    return abs_trace_xd(tower, raw_of(x));
}

std::uint8_t abs_trace_zx(const TowerCtx& tower, const RawCoords& z, const RawCoords& x)
{
    return tower.base().abs_trace(rel_trace_zx(tower, z, x));
}

std::uint8_t abs_trace_zx(const TowerCtx& tower, const Coords& z, const Coords& x)
{
    check_coords(tower, z);
    check_coords(tower, x);
    return abs_trace_zx(tower, raw_of(z), raw_of(x));
}

}  // namespace tcorr
