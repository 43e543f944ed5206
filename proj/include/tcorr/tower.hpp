#pragma once

#include "tcorr/gf.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string_view>

namespace tcorr {

/// Which decimation is under study, with n = 3r:
///   A: d = 3^r + 2
///   B: d = 3^{2r} + 2
enum class DecimationCase { A, B };

std::string_view to_string(DecimationCase c);
DecimationCase parse_decimation_case(std::string_view text);

std::uint64_t decimation_exponent(int r, DecimationCase c);

/// Largest subfield degree for which the cubic tower is built (n = 3r <= 12).
inline constexpr int kMaxTowerDegree = 4;

/// x = x0 + x1*alpha + x2*alpha^2 with coordinates in the subfield F.
struct Coords {
    Elt x0, x1, x2;
};

/// Coordinates as bare subfield indices, for hot loops.
using RawCoords = std::array<std::uint32_t, 3>;

/// Outcome of the self-checks run while the tower is built.
struct TowerChecks {
    bool trace_condition = false;     // Tr(u - 1) = 1 (A) or Tr(1 - u) = 1 (B)
    bool cubic_has_no_root = false;   // x^3 - x - c has no root in F
    bool frobenius_shift = false;     // alpha^{3^r} = alpha + 1
    bool generator_primitive = false; // generator has order 3^{3r} - 1
    bool exponent_coprime = false;    // gcd(d, 3^{3r} - 1) = 1

    bool all() const
    {
        return trace_condition && cubic_has_no_root && frobenius_shift && generator_primitive && exponent_coprime;
    }
};

/// E = F(alpha), alpha^3 = alpha + c, realized on F-triples.
///
/// Tower elements are packed as x0 + q*x1 + q^2*x2 (q = |F|), so the base-3
/// digits of a packed index run over the GF(3)-basis y^j alpha^i. The log and
/// trace tables are built from triple multiplication only.
class TowerCtx {
public:
    const FieldCtx& base() const { return *base_; }
    const std::shared_ptr<const FieldCtx>& base_ptr() const { return base_; }
    int r() const { return base_->degree(); }
    int n() const { return 3 * base_->degree(); }
    DecimationCase decimation_case() const { return case_; }
    std::uint64_t d() const { return d_; }
    Elt u() const { return base_->element(u_); }
    Elt c() const { return base_->element(c_); }
    std::uint32_t size() const { return tables_.size; }
    const LogTables& tables() const { return tables_; }
    const TowerChecks& checks() const { return checks_; }

    std::uint32_t from_coords(const Coords& x) const;
    std::uint32_t pack(const RawCoords& x) const
    {
        return x[0] + q_ * (x[1] + q_ * x[2]);
    }
    Coords coords(std::uint32_t packed) const;
    RawCoords unpack(std::uint32_t packed) const
    {
        return {packed % q_, (packed / q_) % q_, packed / (q_ * q_)};
    }

    /// Triple arithmetic with the reduction alpha^3 = alpha + c.
    RawCoords mul(const RawCoords& a, const RawCoords& b) const;
    RawCoords add(const RawCoords& a, const RawCoords& b) const;
    RawCoords pow(RawCoords a, std::uint64_t k) const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return pack(add(unpack(a), unpack(b))); }

    /// x + x^{q} + x^{q^2} computed by powering; throws std::logic_error if
    /// the result is not in F.
    Elt rel_trace(std::uint32_t packed) const;
    std::uint8_t abs_trace(std::uint32_t packed) const { return tables_.trace[packed]; }

private:
    friend std::shared_ptr<const TowerCtx> build_tower(std::shared_ptr<const FieldCtx> base, DecimationCase c);
    TowerCtx() = default;

    std::shared_ptr<const FieldCtx> base_;
    DecimationCase case_ = DecimationCase::A;
    std::uint64_t d_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t u_ = 0;
    std::uint32_t c_ = 0;
    LogTables tables_;
    TowerChecks checks_;
};

/// Smallest-index u in F with Tr(u - 1) = 1 (case A) or Tr(1 - u) = 1 (case B).
Elt find_u(const FieldCtx& base, DecimationCase c);

/// True if y^3 - y - c vanishes for some y in F (exhaustive search).
bool artin_schreier_has_root(const Elt& c);

/// Builds the tower over F for the given case. Requires 1 <= deg F <= 4.
/// Throws std::logic_error if any construction self-check fails.
std::shared_ptr<const TowerCtx> build_tower(std::shared_ptr<const FieldCtx> base, DecimationCase c);

/// Coordinates of x^{3^r}: alpha maps to alpha + 1.
Coords frobenius_coords(const Coords& x);

/// Tr_r^n(x^d) via the closed cubic form; case A only, case B throws
/// std::invalid_argument.
Elt rel_trace_xd(const TowerCtx& tower, const Coords& x);
std::uint32_t rel_trace_xd(const TowerCtx& tower, const RawCoords& x);

/// Tr_r^n(zx) = 2(z2 + z0)x2 + 2z1x1 + 2z2x0, valid in both cases.
Elt rel_trace_zx(const TowerCtx& tower, const Coords& z, const Coords& x);
std::uint32_t rel_trace_zx(const TowerCtx& tower, const RawCoords& z, const RawCoords& x);

/// Tr_1^n(x^d) through the case's reduced polynomial and the F-trace.
std::uint8_t abs_trace_xd(const TowerCtx& tower, const Coords& x);
std::uint8_t abs_trace_xd(const TowerCtx& tower, const RawCoords& x);

/// Tr_1^n(zx) through the F-trace of rel_trace_zx.
std::uint8_t abs_trace_zx(const TowerCtx& tower, const Coords& z, const Coords& x);
std::uint8_t abs_trace_zx(const TowerCtx& tower, const RawCoords& z, const RawCoords& x);

}  // namespace tcorr
