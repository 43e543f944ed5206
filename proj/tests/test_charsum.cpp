#include "tcorr/charsum.hpp"
#include "tcorr/numeric.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace tcorr;

namespace {

std::shared_ptr<const TowerCtx> make_tower(int r, DecimationCase c) { return build_tower(build_field(r), c); }

// Independent oracle: a flat field built by hand from Poly3 arithmetic only.
// S_d(z) = sum_x w^{Tr(zx - x^d)}, with x^d and Tr computed by polynomial
// powering modulo g.
std::map<std::int64_t, std::uint64_t> poly_oracle_spectrum(const Poly3& g, std::uint64_t d)
{
    const int n = g.degree();
    const std::uint64_t size = pow3(n);
    std::vector<Poly3> elems;
    for (std::uint64_t i = 0; i < size; ++i) {
        std::vector<std::uint8_t> c;
        for (std::uint64_t v = i; v > 0; v /= 3)
            c.push_back(static_cast<std::uint8_t>(v % 3));
        elems.push_back(Poly3(c));
    }
    auto tr = [&](const Poly3& a) {
        Poly3 acc, p = a;
        for (int i = 0; i < n; ++i) {
            acc = acc + p;
            p = powmod(p, 3, g);
        }
        return acc.eval(0);  // constant polynomial
    };
    auto index_of = [&](const Poly3& a) {
        std::uint64_t idx = 0;
        for (int i = n - 1; i >= 0; --i)
            idx = idx * 3 + a[i];
        return idx;
    };
    std::vector<std::uint8_t> trace_of(size), trxd(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        trace_of[i] = tr(elems[i]);
        trxd[i] = tr(powmod(elems[i], d, g));
    }
    std::map<std::int64_t, std::uint64_t> out;
    for (std::uint64_t z = 0; z < size; ++z) {
        std::int64_t counts[3] = {0, 0, 0};
        for (std::uint64_t x = 0; x < size; ++x) {
            const std::uint8_t t = trace_of[index_of((elems[z] * elems[x]).mod(g))];
            ++counts[(t + 3 - trxd[x]) % 3];
        }
        const EisensteinInt s = EisensteinInt::from_counts(counts[0], counts[1], counts[2]);
        ++out[s.as_integer()];
    }
    return out;
}

}  // namespace

TEST(Eisenstein, Basics)
{
    const EisensteinInt w = EisensteinInt::omega();
    EXPECT_EQ(w * w * w, (EisensteinInt{1, 0}));
    EXPECT_EQ((EisensteinInt{1, 0} + w + w * w), (EisensteinInt{0, 0}));
    EXPECT_EQ((EisensteinInt{1, 2}).norm(), 3);
    EXPECT_EQ(w.conj(), w * w);
    EXPECT_EQ(EisensteinInt::from_counts(1, 1, 1), (EisensteinInt{0, 0}));
    EXPECT_EQ(EisensteinInt::omega_pow(-1), w * w);
    EXPECT_EQ((EisensteinInt{3, -2}).to_string(), "3-2*w");
    EXPECT_THROW((EisensteinInt{0, 1}).as_integer(), std::domain_error);
}

TEST(CharacterSum, Examples)
{
    const auto f = build_field(1);
    EXPECT_EQ(character_sum(*f, [](const Elt&) -> std::uint8_t { return 0; }), (EisensteinInt{3, 0}));
    EXPECT_EQ(character_sum(*f, [](const Elt& e) { return static_cast<std::uint8_t>(e.index()); }),
              (EisensteinInt{0, 0}));
    const auto f2 = build_field(2);
    EXPECT_EQ(character_sum(*f2, [&f2](const Elt& e) { return f2->abs_trace(e.index()); }), (EisensteinInt{0, 0}));
}

TEST(WeilBrute, ZeroIsZero)
{
    for (int r = 1; r <= 2; ++r)
        for (auto c : {DecimationCase::A, DecimationCase::B}) {
            const auto t = make_tower(r, c);
            EXPECT_EQ(weil_sum_bruteforce(t->tables(), t->d(), 0), (EisensteinInt{0, 0}));
        }
}

TEST(WeilBrute, IdentityDecimationIsDelta)
{
    // d = 1: S(z) = 3^n if z = 1 else 0.
    const auto f = build_field(4);
    const BruteForceWeil w(f->tables(), 1);
    for (std::uint32_t z = 0; z < f->size(); ++z)
        EXPECT_EQ(w(z), (EisensteinInt{z == 1 ? 81 : 0, 0}));
    EXPECT_THROW(BruteForceWeil(f->tables(), 2), std::invalid_argument);
}

TEST(WeilBrute, R1MatchesPolynomialOracle)
{
    const std::map<std::int64_t, std::uint64_t> expected{{-9, 3}, {0, 18}, {9, 6}};
    for (auto c : {DecimationCase::A, DecimationCase::B}) {
        const auto t = make_tower(1, c);
        std::map<std::int64_t, std::uint64_t> got;
        for (std::uint32_t z = 0; z < t->size(); ++z)
            ++got[weil_sum_bruteforce(t->tables(), t->d(), z).as_integer()];
        EXPECT_EQ(got, expected);
        EXPECT_EQ(poly_oracle_spectrum(Poly3::parse("1,2,0,1"), t->d()), expected);
    }
}

TEST(WeilBrute, R2MatchesPolynomialOracle)
{
    const auto t = make_tower(2, DecimationCase::A);
    std::map<std::int64_t, std::uint64_t> got;
    for (std::uint32_t z = 0; z < t->size(); ++z)
        ++got[weil_sum_bruteforce(t->tables(), t->d(), z).as_integer()];
    const std::map<std::int64_t, std::uint64_t> expected{{-54, 54}, {-27, 108}, {0, 396},
                                                        {27, 108}, {54, 54},   {81, 9}};
    EXPECT_EQ(got, expected);
    EXPECT_EQ(poly_oracle_spectrum(build_field(6)->modulus(), t->d()), expected);
}

TEST(WeilReduced, AgreesPointwiseWithBrute)
{
    for (int r = 1; r <= 3; ++r) {
        for (auto c : {DecimationCase::A, DecimationCase::B}) {
            const auto t = make_tower(r, c);
            const BruteForceWeil brute(t->tables(), t->d());
            for (std::uint32_t z = 0; z < t->size(); ++z) {
                const EisensteinInt b = brute(z);
                ASSERT_TRUE(b.is_rational()) << "r=" << r << " z=" << z;
                ASSERT_EQ(weil_sum_reduced(*t, t->unpack(z)), b.a) << "r=" << r << " z=" << z;
            }
        }
    }
}

TEST(WeilReduced, CoordsOverloadAndBruteTowerOverload)
{
    const auto t = make_tower(2, DecimationCase::B);
    for (std::uint32_t z = 0; z < t->size(); z += 7) {
        const Coords zc = t->coords(z);
        EXPECT_EQ(weil_sum_reduced(*t, zc), weil_sum_bruteforce(*t, zc).as_integer());
    }
}

TEST(WeilReduced, GaussFastPathAgrees)
{
    for (int r = 1; r <= 4; ++r) {
        for (auto c : {DecimationCase::A, DecimationCase::B}) {
            const auto t = make_tower(r, c);
            const std::uint32_t step = r == 4 ? 97 : 1;
            for (std::uint32_t z = 0; z < t->size(); z += step)
                ASSERT_EQ(weil_sum_reduced(*t, t->unpack(z), {true}), weil_sum_reduced(*t, t->unpack(z)));
        }
    }
}

TEST(WeilReduced, VanishesWhenMinusZ2IsNonSquare)
{
    const auto t = make_tower(2, DecimationCase::A);
    for (std::uint32_t z = 0; z < t->size(); ++z) {
        const Coords zc = t->coords(z);
        if (sqrt_set(-zc.x2).empty())
            ASSERT_EQ(weil_sum_reduced(*t, zc), 0);
    }
}

TEST(WeilSum, MomentsAndRealness)
{
    for (int r = 1; r <= 3; ++r) {
        for (auto c : {DecimationCase::A, DecimationCase::B}) {
            const auto t = make_tower(r, c);
            const BruteForceWeil brute(t->tables(), t->d());
            wide_int m1 = 0, m2 = 0;
            for (std::uint32_t z = 0; z < t->size(); ++z) {
                const EisensteinInt s = brute(z);
                ASSERT_EQ(s.b, 0);
                m1 += s.a;
                m2 += static_cast<wide_int>(s.a) * s.a;
            }
            EXPECT_TRUE(m1 == wide_pow3(3 * r)) << "r=" << r;
            EXPECT_TRUE(m2 == wide_pow3(6 * r)) << "r=" << r;
        }
    }
}

TEST(QuadraticWeil, NormIsFieldSizeExhaustive)
{
    for (int r = 1; r <= 3; ++r) {
        const auto f = build_field(r);
        for (std::uint32_t a = 1; a < f->size(); ++a)
            for (std::uint32_t b = 0; b < f->size(); ++b)
                ASSERT_EQ(quadratic_weil_sum(f->element(a), f->element(b)).norm(),
                          static_cast<std::int64_t>(pow3(r)));
    }
}

TEST(QuadraticWeil, ClosedFormMatchesCompletedSquare)
{
    for (int r = 1; r <= 4; ++r) {
        const auto f = build_field(r);
        for (std::uint32_t a = 1; a < f->size(); ++a)
            for (std::uint32_t b = 0; b < f->size(); ++b)
                ASSERT_EQ(quadratic_weil_sum_closed(f->element(a), f->element(b)),
                          quadratic_weil_sum(f->element(a), f->element(b)));
    }
    const auto f = build_field(1);
    EXPECT_THROW(quadratic_weil_sum_closed(f->zero(), f->one()), std::invalid_argument);
    EXPECT_EQ(quadratic_weil_sum(f->zero(), f->zero()), (EisensteinInt{3, 0}));
}

TEST(GaussSum, NormsAndValues)
{
    for (int r = 1; r <= 3; ++r)
        EXPECT_EQ(gauss_sum(*build_field(r)).norm(), static_cast<std::int64_t>(pow3(r)));
    // GF(3): 1 + 2w, i.e. sqrt(-3).
    EXPECT_EQ(gauss_sum(*build_field(1)), (EisensteinInt{1, 2}));
    EXPECT_EQ(gauss_sum(*build_field(2)), (EisensteinInt{3, 0}));
}

TEST(WeilParams, Make)
{
    const WeilParams p = WeilParams::make(3, DecimationCase::B);
    EXPECT_EQ(p.n, 9);
    EXPECT_EQ(p.d, 731u);
    EXPECT_THROW(WeilParams::make(0, DecimationCase::A), std::invalid_argument);
}

TEST(WeilReduced, AgreesWithBruteOnSampledR4)
{
    std::mt19937_64 rng(11);
    for (auto c : {DecimationCase::A, DecimationCase::B}) {
        const auto t = make_tower(4, c);
        const BruteForceWeil brute(t->tables(), t->d());
        std::uniform_int_distribution<std::uint32_t> pick(1, t->size() - 1);
        for (int i = 0; i < 24; ++i) {
            const std::uint32_t z = pick(rng);
            ASSERT_EQ(weil_sum_reduced(*t, t->unpack(z)), brute(z).as_integer()) << "z=" << z;
        }
    }
}
