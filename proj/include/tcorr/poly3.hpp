#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tcorr {

/// Polynomial over GF(3), coefficients stored constant term first.
///
/// The coefficient vector is kept normalized: no trailing zero digits, so the
/// zero polynomial has an empty vector and degree -1.
class Poly3 {
public:
    Poly3() = default;
    explicit Poly3(std::vector<std::uint8_t> coeffs);

    /// The monomial x^k.
    static Poly3 monomial(int k, std::uint8_t coeff = 1);
    static Poly3 constant(std::uint8_t c) { return monomial(0, c); }

    /// Parses "2,2,0,1" (constant term first). Throws std::invalid_argument.
    static Poly3 parse(std::string_view text);
    std::string to_string() const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    std::uint8_t operator[](int i) const
    {
        return i >= 0 && i <= degree() ? coeffs_[static_cast<std::size_t>(i)] : 0;
    }
    std::uint8_t leading() const { return is_zero() ? 0 : coeffs_.back(); }
    const std::vector<std::uint8_t>& coeffs() const { return coeffs_; }

    Poly3 monic() const;
    std::uint8_t eval(std::uint8_t x) const;

    friend Poly3 operator+(const Poly3& a, const Poly3& b);
    friend Poly3 operator-(const Poly3& a, const Poly3& b);
    friend Poly3 operator*(const Poly3& a, const Poly3& b);
    friend bool operator==(const Poly3&, const Poly3&) = default;

    /// Long division; divisor must be nonzero.
    struct DivMod;
    DivMod divmod(const Poly3& divisor) const;
    Poly3 mod(const Poly3& divisor) const;

private:
    void normalize();
    std::vector<std::uint8_t> coeffs_;
};

struct Poly3::DivMod {
    Poly3 quotient;
    Poly3 remainder;
};

/// Monic gcd.
Poly3 gcd(Poly3 a, Poly3 b);

/// base^exponent mod modulus.
Poly3 powmod(const Poly3& base, std::uint64_t exponent, const Poly3& modulus);

/// Ben-Or test: p has no factor in common with x^{3^k} - x for k <= deg/2.
bool is_irreducible(const Poly3& p);

/// Irreducible, nonzero constant term, and the class of x has order 3^deg - 1.
bool is_primitive(const Poly3& p);

/// Smallest-degree monic proper factor, found by trial division over all
/// monic candidates in lexicographic order. Empty when p is irreducible.
std::optional<Poly3> find_factor(const Poly3& p);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace tcorr
