#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcorr {

/// a + b*w in Z[w], w a primitive cube root of unity (w^2 = -1 - w).
struct EisensteinInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    static constexpr EisensteinInt omega() { return {0, 1}; }

    /// w^k for k in {0, 1, 2} (taken mod 3).
    static constexpr EisensteinInt omega_pow(int k)
    {
        switch (((k % 3) + 3) % 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        default: return {-1, -1};
        }
    }

    /// c0 + c1*w + c2*w^2 from phase counts.
    static constexpr EisensteinInt from_counts(std::int64_t c0, std::int64_t c1, std::int64_t c2)
    {
        return {c0 - c2, c1 - c2};
    }

    constexpr EisensteinInt conj() const { return {a - b, -b}; }
    constexpr std::int64_t norm() const { return a * a - a * b + b * b; }
    constexpr bool is_rational() const { return b == 0; }

    std::int64_t as_integer() const
    {
        if (b != 0)
            throw std::domain_error("Eisenstein value " + to_string() + " is not a rational integer");
        return a;
    }

    /// "a+b*w", with the sign folded into the w term.
    std::string to_string() const
    {
        std::string out = std::to_string(a);
        out += b < 0 ? "-" : "+";
        out += std::to_string(b < 0 ? -b : b);
        out += "*w";
        return out;
    }

    friend constexpr EisensteinInt operator+(EisensteinInt x, EisensteinInt y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr EisensteinInt operator-(EisensteinInt x, EisensteinInt y) { return {x.a - y.a, x.b - y.b}; }
    friend constexpr EisensteinInt operator*(EisensteinInt x, EisensteinInt y)
    {
        // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, w^2 = -1 - w
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    friend constexpr EisensteinInt operator*(std::int64_t k, EisensteinInt x) { return {k * x.a, k * x.b}; }
    friend constexpr bool operator==(EisensteinInt, EisensteinInt) = default;
};

}  // namespace tcorr
