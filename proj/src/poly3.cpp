#include "tcorr/poly3.hpp"

#include "tcorr/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcorr {

namespace {

constexpr std::uint8_t mod3(int v) { return static_cast<std::uint8_t>(((v % 3) + 3) % 3); }

// In GF(3) every nonzero element is its own inverse.
constexpr std::uint8_t inv3(std::uint8_t v) { return v; }

}  // namespace

Poly3::Poly3(std::vector<std::uint8_t> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto c : coeffs_)
        if (c > 2)
            throw std::invalid_argument("polynomial digit out of range: " + std::to_string(c));
    normalize();
}

Poly3 Poly3::monomial(int k, std::uint8_t coeff)
{
    std::vector<std::uint8_t> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = mod3(coeff);
    return Poly3(std::move(v));
}

Poly3 Poly3::parse(std::string_view text)
{
    std::vector<std::uint8_t> digits;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        if (tok.size() != 1 || tok[0] < '0' || tok[0] > '2')
            throw std::invalid_argument("bad polynomial digit '" + std::string(tok) + "' in \"" +
                                        std::string(text) + "\"");
        digits.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
        pos = comma + 1;
    }
    return Poly3(std::move(digits));
}

std::string Poly3::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out.push_back(',');
        out.push_back(static_cast<char>('0' + coeffs_[i]));
    }
    return out;
}

void Poly3::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Poly3 Poly3::monic() const
{
    if (is_zero() || leading() == 1)
        return *this;
    std::vector<std::uint8_t> v(coeffs_);
    for (auto& c : v)
        c = mod3(c * 2);
    return Poly3(std::move(v));
}

std::uint8_t Poly3::eval(std::uint8_t x) const
{
    int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = (acc * x + *it) % 3;
    return static_cast<std::uint8_t>(acc);
}

Poly3 operator+(const Poly3& a, const Poly3& b)
{
    std::vector<std::uint8_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = mod3(a[static_cast<int>(i)] + b[static_cast<int>(i)]);
    return Poly3(std::move(v));
}

Poly3 operator-(const Poly3& a, const Poly3& b)
{
    std::vector<std::uint8_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = mod3(a[static_cast<int>(i)] - b[static_cast<int>(i)]);
    return Poly3(std::move(v));
}

Poly3 operator*(const Poly3& a, const Poly3& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<int> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            acc[i + j] += a.coeffs_[i] * b.coeffs_[j];
    std::vector<std::uint8_t> v(acc.size());
    std::transform(acc.begin(), acc.end(), v.begin(), [](int x) { return mod3(x); });
    return Poly3(std::move(v));
}

Poly3::DivMod Poly3::divmod(const Poly3& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<std::uint8_t> rem(coeffs_);
    const int dd = divisor.degree();
    const std::uint8_t lead_inv = inv3(divisor.leading());
    std::vector<std::uint8_t> quot(rem.size() > static_cast<std::size_t>(dd) ? rem.size() - dd : 0, 0);
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        const std::uint8_t c = rem[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        const std::uint8_t q = mod3(c * lead_inv);
        quot[static_cast<std::size_t>(k - dd)] = q;
        for (int i = 0; i <= dd; ++i) {
            auto& slot = rem[static_cast<std::size_t>(k - dd + i)];
            slot = mod3(slot - q * divisor.coeffs_[static_cast<std::size_t>(i)]);
        }
    }
    return {Poly3(std::move(quot)), Poly3(std::move(rem))};
}

Poly3 Poly3::mod(const Poly3& divisor) const { return divmod(divisor).remainder; }

Poly3 gcd(Poly3 a, Poly3 b)
{
    while (!b.is_zero()) {
        Poly3 r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly3 powmod(const Poly3& base, std::uint64_t exponent, const Poly3& modulus)
{
    Poly3 result = Poly3::constant(1).mod(modulus);
    Poly3 b = base.mod(modulus);
    while (exponent) {
        if (exponent & 1)
            result = (result * b).mod(modulus);
        b = (b * b).mod(modulus);
        exponent >>= 1;
    }
    return result;
}

bool is_irreducible(const Poly3& p)
{
    if (p.degree() < 1)
        throw std::invalid_argument("irreducibility needs degree >= 1");
    if (p.degree() == 1)
        return true;
    const Poly3 x = Poly3::monomial(1);
    Poly3 h = x.mod(p);
    for (int k = 1; k <= p.degree() / 2; ++k) {
        h = powmod(h, 3, p);
        if (!gcd(p, h - x).is_one())
            return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0)
                n /= f;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

bool is_primitive(const Poly3& p)
{
    if (!is_irreducible(p) || p[0] == 0)
        return false;
    const std::uint64_t order = pow3(p.degree()) - 1;
    const Poly3 x = Poly3::monomial(1);
    if (!powmod(x, order, p).is_one())
        return false;
    for (auto q : prime_divisors(order))
        if (powmod(x, order / q, p).is_one())
            return false;
    return true;
}

std::optional<Poly3> find_factor(const Poly3& p)
{
    if (p.degree() < 1)
        throw std::invalid_argument("factor search needs degree >= 1");
    for (int k = 1; k <= p.degree() / 2; ++k) {
        const std::uint64_t count = pow3(k);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            // Candidate x^k + c_{k-1} x^{k-1} + ... + c_0, constant term most significant.
            std::vector<std::uint8_t> v(static_cast<std::size_t>(k) + 1, 0);
            v.back() = 1;
            std::uint64_t rest = idx;
            for (int i = k - 1; i >= 0; --i) {
                v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rest % 3);
                rest /= 3;
            }
            Poly3 cand(std::move(v));
            if (p.mod(cand).is_zero())
                return cand;
        }
    }
    return std::nullopt;
}

}  // namespace tcorr
