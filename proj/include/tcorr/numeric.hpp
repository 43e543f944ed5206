#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcorr {

/// Signed 128-bit integer for moment sums and closed-form counts at r <= 8,
/// where 3^{6r} no longer fits in 64 bits.
__extension__ using wide_int = __int128;

constexpr std::uint64_t pow3(int k)
{
    std::uint64_t v = 1;
    for (int i = 0; i < k; ++i)
        v *= 3;
    return v;
}

constexpr wide_int wide_pow3(int k)
{
    wide_int v = 1;
    for (int i = 0; i < k; ++i)
        v *= 3;
    return v;
}

constexpr wide_int wide_abs(wide_int v) { return v < 0 ? -v : v; }

constexpr wide_int wide_gcd(wide_int a, wide_int b)
{
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string(wide_int v);

/// Narrows to int64, throwing std::overflow_error when out of range.
std::int64_t narrow_i64(wide_int v);

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational(wide_int num = 0, wide_int den = 1);

    wide_int num() const { return num_; }
    wide_int den() const { return den_; }
    bool integral() const { return den_ == 1; }
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;

private:
    wide_int num_;
    wide_int den_;
};

}  // namespace tcorr
