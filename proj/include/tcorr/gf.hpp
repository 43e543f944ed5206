#pragma once

#include "tcorr/poly3.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tcorr {

/// Largest extension degree for which tables are built (3^12 = 531441 entries).
inline constexpr int kMaxFieldDegree = 12;

/// Raised by build_field when the supplied modulus factors.
class ReducibleModulusError : public std::invalid_argument {
public:
    ReducibleModulusError(const Poly3& modulus, const Poly3& factor);
    const Poly3& modulus() const { return modulus_; }
    const Poly3& factor() const { return factor_; }

private:
    Poly3 modulus_;
    Poly3 factor_;
};

/// Exponential / logarithm / absolute-trace tables of a finite field of
/// characteristic 3 whose elements are packed into integers [0, size).
///
/// Shared by the flat fields GF(3)[y]/(g) and the cubic tower F(alpha); the
/// packing differs but every table-driven routine only sees indices.
struct LogTables {
    std::uint32_t size = 0;         // 3^m
    std::uint32_t order = 0;        // size - 1
    std::uint32_t generator = 0;
    std::vector<std::uint32_t> exp;  // length 2 * order; exp[k] = generator^(k mod order)
    std::vector<std::uint32_t> log;  // log[0] is unused
    std::vector<std::uint8_t> trace; // absolute trace into GF(3)

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp[log[a] + log[b]];
    }

    /// a^k for k >= 0 (0^0 = 1).
    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const
    {
        if (a == 0)
            return k == 0 ? exp[0] : 0;
        return exp[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log[a]) * (k % order)) % order)];
    }
};

class FieldCtx;

/// Element of a FieldCtx: packed base-3 digits in the polynomial basis.
/// Digit i of the index is the coefficient of y^i.
class Elt {
public:
    Elt() = default;
    Elt(const FieldCtx& field, std::uint32_t index);

    const FieldCtx& field() const { return *field_; }
    std::uint32_t index() const { return index_; }
    bool is_zero() const { return index_ == 0; }
    std::vector<std::uint8_t> digits() const;

    friend Elt operator+(const Elt& a, const Elt& b);
    friend Elt operator-(const Elt& a, const Elt& b);
    friend Elt operator*(const Elt& a, const Elt& b);
    Elt operator-() const;
    Elt inv() const;
    /// Negative exponents allowed for nonzero elements.
    Elt pow(std::int64_t k) const;

    friend bool operator==(const Elt& a, const Elt& b) { return a.field_ == b.field_ && a.index_ == b.index_; }

private:
    const FieldCtx* field_ = nullptr;
    std::uint32_t index_ = 0;
};

/// GF(3^m) = GF(3)[y]/(modulus), immutable after construction.
class FieldCtx {
public:
    int degree() const { return m_; }
    std::uint32_t size() const { return tables_.size; }
    const Poly3& modulus() const { return modulus_; }
    const LogTables& tables() const { return tables_; }

    Elt element(std::uint32_t index) const;
    Elt zero() const { return element(0); }
    Elt one() const { return element(1); }
    Elt generator() const { return element(tables_.generator); }
    /// Embeds a GF(3) digit.
    Elt from_int(int v) const { return element(static_cast<std::uint32_t>(((v % 3) + 3) % 3)); }
    Elt from_digits(const std::vector<std::uint8_t>& digits) const;

    // Raw index arithmetic; operands must be valid indices of this field.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return tables_.mul(a, b); }
    std::uint8_t abs_trace(std::uint32_t a) const { return tables_.trace[a]; }

private:
    friend std::shared_ptr<const FieldCtx> build_field(int m, std::optional<Poly3> modulus);
    FieldCtx() = default;

    int m_ = 0;
    Poly3 modulus_;
    LogTables tables_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint16_t> add_table_;  // dense, only for small fields
};

/// Builds GF(3^m). Without a modulus the lexicographically smallest primitive
/// polynomial (constant term compared first) is used. A supplied modulus is
/// made monic and must be irreducible. The generator is the first element of
/// multiplicative order 3^m - 1 in ascending index order.
std::shared_ptr<const FieldCtx> build_field(int m, std::optional<Poly3> modulus = std::nullopt);

/// Sum of e^{3^{k i}} for i < m/k; lands in the subfield GF(3^k).
Elt trace(const Elt& e, int target_degree);

/// All y with y^2 = c, sorted by index.
std::vector<Elt> sqrt_set(const Elt& c);

/// Quadratic character: +1, -1, or 0 for c = 0.
int quadratic_character(const Elt& c);

/// Discrete logarithm base the field generator.
std::uint32_t dlog(const Elt& e);

}  // namespace tcorr
