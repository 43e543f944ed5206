#include "tcorr/numeric.hpp"

#include <algorithm>
#include <limits>

namespace tcorr {

std::string to_string(wide_int v)
{
    if (v == 0)
        return "0";
    const bool negative = v < 0;
    std::string out;
    // Work with negative remainders so the minimum value is safe.
    while (v != 0) {
        int digit = static_cast<int>(v % 10);
        out.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
        v /= 10;
    }
    if (negative)
        out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

std::int64_t narrow_i64(wide_int v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value " + to_string(v) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

Rational::Rational(wide_int num, wide_int den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const wide_int g = wide_gcd(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

std::string Rational::to_string() const
{
    if (den_ == 1)
        return tcorr::to_string(num_);
    return tcorr::to_string(num_) + "/" + tcorr::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

}  // namespace tcorr
