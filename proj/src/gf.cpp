#include "tcorr/gf.hpp"

#include "tcorr/numeric.hpp"

#include <string>

namespace tcorr {

namespace {

constexpr int kDenseAddMaxDegree = 6;

std::uint32_t digit_add(std::uint32_t a, std::uint32_t b)
{
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    while (a | b) {
        out += ((a % 3 + b % 3) % 3) * place;
        a /= 3;
        b /= 3;
        place *= 3;
    }
    return out;
}

std::uint32_t digit_neg(std::uint32_t a)
{
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    while (a) {
        out += ((3 - a % 3) % 3) * place;
        a /= 3;
        place *= 3;
    }
    return out;
}

Poly3 index_to_poly(std::uint32_t index, int m)
{
    std::vector<std::uint8_t> v(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % 3);
        index /= 3;
    }
    return Poly3(std::move(v));
}

// Multiplies a packed element by another modulo a monic modulus of degree m,
// without heap traffic. Used only while the log tables are being built.
std::uint32_t mulmod_packed(std::uint32_t a, std::uint32_t b, const Poly3& modulus, int m)
{
    std::array<int, 2 * kMaxFieldDegree> prod{};
    std::array<int, kMaxFieldDegree> da{}, db{};
    for (int i = 0; i < m; ++i) {
        da[static_cast<std::size_t>(i)] = static_cast<int>(a % 3);
        db[static_cast<std::size_t>(i)] = static_cast<int>(b % 3);
        a /= 3;
        b /= 3;
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
    for (int k = 2 * m - 2; k >= m; --k) {
        const int c = prod[static_cast<std::size_t>(k)] % 3;
        if (c == 0)
            continue;
        for (int i = 0; i <= m; ++i)
            prod[static_cast<std::size_t>(k - m + i)] -= c * modulus[i];
    }
    std::uint32_t out = 0;
    for (int i = m - 1; i >= 0; --i)
        out = out * 3 + static_cast<std::uint32_t>(((prod[static_cast<std::size_t>(i)] % 3) + 3) % 3);
    return out;
}

bool has_full_order(const Poly3& element, const Poly3& modulus, std::uint64_t order,
                    const std::vector<std::uint64_t>& primes)
{
    if (element.is_zero())
        return false;
    for (auto q : primes)
        if (powmod(element, order / q, modulus).is_one())
            return false;
    return true;
}

Poly3 smallest_primitive(int m)
{
    const std::uint64_t count = pow3(m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint8_t> v(static_cast<std::size_t>(m) + 1, 0);
        v.back() = 1;
        std::uint64_t rest = idx;
        for (int i = m - 1; i >= 0; --i) {
            v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rest % 3);
            rest /= 3;
        }
        Poly3 cand(std::move(v));
        if (is_primitive(cand))
            return cand;
    }
    throw std::logic_error("no primitive polynomial of degree " + std::to_string(m));
}

}  // namespace

ReducibleModulusError::ReducibleModulusError(const Poly3& modulus, const Poly3& factor)
    : std::invalid_argument("modulus " + modulus.to_string() + " is reducible: divisible by " + factor.to_string()),
      modulus_(modulus),
      factor_(factor)
{
}

std::shared_ptr<const FieldCtx> build_field(int m, std::optional<Poly3> modulus)
{
    if (m < 1)
        throw std::invalid_argument("field degree must be >= 1, got " + std::to_string(m));
    if (m > kMaxFieldDegree)
        throw std::invalid_argument("field degree " + std::to_string(m) + " exceeds table limit " +
                                    std::to_string(kMaxFieldDegree));

    Poly3 mod;
    if (modulus) {
        if (modulus->degree() != m)
            throw std::invalid_argument("modulus " + modulus->to_string() + " has degree " +
                                        std::to_string(modulus->degree()) + ", expected " + std::to_string(m));
        mod = modulus->monic();
        if (!is_irreducible(mod))
            throw ReducibleModulusError(mod, find_factor(mod).value());
    } else {
        mod = smallest_primitive(m);
    }

    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->m_ = m;
    ctx->modulus_ = mod;
    LogTables& t = ctx->tables_;
    t.size = static_cast<std::uint32_t>(pow3(m));
    t.order = t.size - 1;

    const auto primes = prime_divisors(t.order);
    std::uint32_t gen = 0;
    for (std::uint32_t idx = 1; idx < t.size; ++idx) {
        if (has_full_order(index_to_poly(idx, m), mod, t.order, primes)) {
            gen = idx;
            break;
        }
    }
    if (gen == 0)
        throw std::logic_error("no primitive element found in GF(3^" + std::to_string(m) + ")");
    t.generator = gen;

    t.exp.assign(2 * static_cast<std::size_t>(t.order), 0);
    t.log.assign(t.size, 0);
    std::vector<bool> seen(t.size, false);
    std::uint32_t cur = 1;
    for (std::uint32_t k = 0; k < t.order; ++k) {
        if (seen[cur])
            throw std::logic_error("generator order check disagrees with table construction");
        seen[cur] = true;
        t.exp[k] = cur;
        t.exp[k + t.order] = cur;
        t.log[cur] = k;
        cur = mulmod_packed(cur, gen, mod, m);
    }

    ctx->neg_.resize(t.size);
    for (std::uint32_t a = 0; a < t.size; ++a)
        ctx->neg_[a] = digit_neg(a);
    if (m <= kDenseAddMaxDegree) {
        ctx->add_table_.resize(static_cast<std::size_t>(t.size) * t.size);
        for (std::uint32_t a = 0; a < t.size; ++a)
            for (std::uint32_t b = 0; b < t.size; ++b)
                ctx->add_table_[static_cast<std::size_t>(a) * t.size + b] = static_cast<std::uint16_t>(digit_add(a, b));
    }

    // Trace is GF(3)-linear: evaluate it on the basis y^i by Frobenius powering.
    std::vector<std::uint8_t> basis_trace(static_cast<std::size_t>(m));
    std::uint32_t place = 1;
    for (int i = 0; i < m; ++i, place *= 3) {
        std::uint32_t acc = 0;
        std::uint32_t term = place;
        for (int j = 0; j < m; ++j) {
            acc = digit_add(acc, term);
            term = t.pow(term, 3);
        }
        if (acc > 2)
            throw std::logic_error("trace of basis element left the prime field");
        basis_trace[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(acc);
    }
    t.trace.resize(t.size);
    for (std::uint32_t a = 0; a < t.size; ++a) {
        std::uint32_t rest = a;
        int acc = 0;
        for (int i = 0; i < m; ++i) {
            acc += static_cast<int>(rest % 3) * basis_trace[static_cast<std::size_t>(i)];
            rest /= 3;
        }
        t.trace[a] = static_cast<std::uint8_t>(acc % 3);
    }
    return ctx;
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const
{
    if (!add_table_.empty())
        return add_table_[static_cast<std::size_t>(a) * tables_.size + b];
    return digit_add(a, b);
}

Elt FieldCtx::element(std::uint32_t index) const
{
    if (index >= tables_.size)
        throw std::invalid_argument("element index " + std::to_string(index) + " outside GF(3^" +
                                    std::to_string(m_) + ")");
    return Elt(*this, index);
}

Elt FieldCtx::from_digits(const std::vector<std::uint8_t>& digits) const
{
    if (static_cast<int>(digits.size()) != m_)
        throw std::invalid_argument("digit vector length must equal field degree");
    std::uint32_t index = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it > 2)
            throw std::invalid_argument("digit out of range");
        index = index * 3 + *it;
    }
    return element(index);
}

Elt::Elt(const FieldCtx& field, std::uint32_t index) : field_(&field), index_(index) {}

std::vector<std::uint8_t> Elt::digits() const
{
    std::vector<std::uint8_t> out(static_cast<std::size_t>(field_->degree()));
    std::uint32_t rest = index_;
    for (auto& d : out) {
        d = static_cast<std::uint8_t>(rest % 3);
        rest /= 3;
    }
    return out;
}

namespace {

void require_same_field(const Elt& a, const Elt& b)
{
    if (&a.field() != &b.field())
        throw std::invalid_argument("operands belong to different fields");
}

}  // namespace

Elt operator+(const Elt& a, const Elt& b)
{
    require_same_field(a, b);
    return Elt(*a.field_, a.field_->add(a.index_, b.index_));
}

Elt operator-(const Elt& a, const Elt& b)
{
    require_same_field(a, b);
    return Elt(*a.field_, a.field_->sub(a.index_, b.index_));
}

Elt operator*(const Elt& a, const Elt& b)
{
    require_same_field(a, b);
    return Elt(*a.field_, a.field_->mul(a.index_, b.index_));
}

Elt Elt::operator-() const { return Elt(*field_, field_->neg(index_)); }

Elt Elt::inv() const
{
    if (index_ == 0)
        throw std::domain_error("inverse of zero");
    const LogTables& t = field_->tables();
    return Elt(*field_, t.exp[(t.order - t.log[index_]) % t.order]);
}

Elt Elt::pow(std::int64_t k) const
{
    const LogTables& t = field_->tables();
    if (index_ == 0) {
        if (k < 0)
            throw std::domain_error("negative power of zero");
        return Elt(*field_, k == 0 ? 1 : 0);
    }
    const std::int64_t order = t.order;
    const std::int64_t e = ((k % order) + order) % order;
    return Elt(*field_, t.exp[static_cast<std::uint32_t>((static_cast<std::int64_t>(t.log[index_]) * e) % order)]);
}

Elt trace(const Elt& e, int target_degree)
{
    const int m = e.field().degree();
    if (target_degree < 1 || m % target_degree != 0)
        throw std::invalid_argument("trace target degree " + std::to_string(target_degree) +
                                    " does not divide " + std::to_string(m));
    const std::int64_t step = static_cast<std::int64_t>(pow3(target_degree));
    Elt acc = e.field().zero();
    Elt term = e;
    for (int i = 0; i < m / target_degree; ++i) {
        acc = acc + term;
        term = term.pow(step);
    }
    return acc;
}

int quadratic_character(const Elt& c)
{
    if (c.is_zero())
        return 0;
    const Elt eta = c.pow(static_cast<std::int64_t>((c.field().size() - 1) / 2));
    return eta == c.field().one() ? 1 : -1;
}

std::vector<Elt> sqrt_set(const Elt& c)
{
    if (c.is_zero())
        return {c};
    if (quadratic_character(c) != 1)
        return {};
    const LogTables& t = c.field().tables();
    // Squares are exactly the even powers of the generator.
    const Elt y = c.field().element(t.exp[t.log[c.index()] / 2]);
    Elt a = y;
    Elt b = -y;
    if (b.index() < a.index())
        std::swap(a, b);
    return {a, b};
}

std::uint32_t dlog(const Elt& e)
{
    if (e.is_zero())
        throw std::domain_error("discrete log of zero");
    return e.field().tables().log[e.index()];
}

}  // namespace tcorr
