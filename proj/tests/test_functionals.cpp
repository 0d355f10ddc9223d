#include <doctest.h>

#include <cmath>
#include <random>

#include "reeb/error.hpp"
#include "reeb/functionals.hpp"
#include "reeb/roots.hpp"
#include "support.hpp"

using namespace reeb;
using reeb::testing::ints;
using reeb::testing::q;
using reeb::testing::var;

namespace {

const JoinParams kTriple{2, q(1), 1, 29, 3, 2};
const JoinParams kBoth{1, q(-12), 1, 1, 9, 4};

JoinParams genus_two(long l2) { return {1, q(-2), 1, l2, 3, 2}; }

UniPoly bV(const JoinParams& p) { return var() * volume_numerator(p); }

}  // namespace

TEST_CASE("scalar and volume numerators") {
    CHECK(scalar_numerator(kTriple) == ints({4, 58, 87, 9}));
    CHECK(volume_numerator(kTriple) == ints({4, 6, 9}));
    for (long l2 : {1L, 5L, 101L}) CHECK(scalar_numerator(genus_two(l2)) == ints({2, -2 * l2, 3}));
    CHECK(volume_numerator(genus_two(7)) == ints({2, 3}));
    CHECK(scalar_numerator({1, q(0), 5, 3, 7, 2}) == ints({2, 0, 7}) * q(5));
    CHECK(volume_numerator({1, q(0), 1, 1, 1, 1}) == ints({1, 1}));
    CHECK(scalar_numerator(kBoth) == ints({4, -12, 9}));
}

TEST_CASE("per-ray totals") {
    CHECK(total_scalar(kTriple, RayId(BigInt(1), BigInt(1))) == q(158));
    CHECK(total_volume(kTriple, RayId(BigInt(1), BigInt(1))) == q(19));
    CHECK(total_scalar(kBoth, RayId(BigInt(3), BigInt(2))) == q(0));
    CHECK(total_volume(genus_two(1), RayId(BigInt(1), BigInt(2))) == q(2));
    CHECK_THROWS_AS(total_scalar(kTriple, RayId(BigInt(2), BigInt(2))), DomainError);
}

TEST_CASE("Einstein-Hilbert closed form") {
    const UniPoly S = scalar_numerator(kTriple);
    const UniPoly V = volume_numerator(kTriple);
    CHECK(einstein_hilbert(kTriple) == RationalFn(S.pow(4), var().pow(3) * V.pow(3)));
    CHECK(einstein_hilbert(kTriple)(q(1)) == q(623201296, 6859));
    for (long l2 : {1L, 101L}) {
        const RationalFn H = einstein_hilbert(genus_two(l2));
        CHECK(H == RationalFn(ints({2, -2 * l2, 3}).pow(3), var().pow(2) * ints({2, 3}).pow(2)));
    }
}

TEST_CASE("f polynomial") {
    for (long l2 : {1L, 7L, 101L}) {
        const UniPoly expected = ints({-64, 96 - 32 * l2, 192 * l2 + 624, -(432 * l2 + 1800), 432 * l2 + 1296, 324 - 162 * l2, -486});
        CAPTURE(l2);
        CHECK(f_polynomial(genus_two(l2)) == expected);
    }
    CHECK(f_polynomial(kTriple).degree() == 8);
    CHECK(root_multiplicity(f_polynomial(kTriple), q(2, 3)) == 3);
    CHECK(root_multiplicity(f_polynomial({1, q(0), 1, 1, 1, 1}), q(1)) >= 4);
    CHECK(root_multiplicity(f_polynomial({3, q(2), 3, 1, 1, 1}), q(1)) >= 4);
}

TEST_CASE("f_csc examples") {
    const UniPoly fc = f_csc(kTriple);
    CHECK(fc == ints({-48, 88, 720, -1242, -459, 243}));
    CHECK(fc(q(0)) == q(-48));
    CHECK(fc(q(1, 3)) == q(32, 3));
    CHECK(fc(q(2, 3)) == q(-96));
    CHECK(f_csc(genus_two(1)) == ints({-8, -28, 30, 18}));
    CHECK(f_csc(genus_two(101)) == ints({-8, -428, 630, 18}));
    CHECK(f_csc(genus_two(101))(q(1, 2)) == q(-249, 4));
    CHECK(f_csc(kBoth) == ints({-32, -192, 252, 162}));
    CHECK(f_csc(kBoth)(q(2, 3)) == q(0));
    CHECK(f_csc({1, q(0), 1, 1, 1, 1}) == ints({-2, -4, 4, 2}));
}

TEST_CASE("f_csc quoted roots") {
    for (auto [l2, root] : {std::pair{1L, 0.834730}, std::pair{101L, 0.684530}}) {
        const UniPoly fc = f_csc(genus_two(l2));
        const auto ivs = isolate_positive_roots(fc);
        REQUIRE(ivs.size() == 1);
        CHECK(refine_root(fc, ivs[0], q(1, 1000000000)).to_double() == doctest::Approx(root).epsilon(1e-5));
    }
}

TEST_CASE("derivatives") {
    SUBCASE("closed form of H'") {
        const UniPoly S = scalar_numerator(kTriple);
        const UniPoly V = volume_numerator(kTriple);
        CHECK(eh_derivative(kTriple) == RationalFn(S.pow(3) * f_csc(kTriple), var().pow(4) * V.pow(4)));
        for (const Rational& b : {q(1, 3), q(2, 3)}) CHECK(eh_derivative(kTriple)(b).sign() == f_csc(kTriple)(b).sign());
    }
    SUBCASE("symmetric bundle") {
        const JoinParams p{1, q(0), 1, 1, 1, 1};
        CHECK(eh_derivative(p)(q(1)) == q(0));
        CHECK(eh_second_derivative(p)(q(1)) > q(0));
        CHECK(eh_second_derivative(p)(q(1)) == q(5));
    }
    SUBCASE("second derivative at the triple critical points") {
        const UniPoly fc = f_csc(kTriple);
        const auto ivs = isolate_positive_roots(fc);
        REQUIRE(ivs.size() == 3);
        const RationalFn d2 = eh_second_derivative(kTriple);
        const int want[] = {1, -1, 1};
        for (int i = 0; i < 3; ++i) CHECK(d2(refine_root(fc, ivs[i], q(1, 1000000000000))).sign() == want[i]);
    }
    SUBCASE("H vanishes to second order at the doubled null-scalar ray") {
        const RationalFn H = einstein_hilbert(kBoth);
        CHECK(H(q(2, 3)) == q(0));
        for (const Rational& b : {q(1, 2), q(5, 8), q(7, 10), q(3, 4)}) CHECK(H(b) >= q(0));
    }
    SUBCASE("central differences") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            const JoinParams p = testing::random_params(rng, 3);
            const RationalFn H = einstein_hilbert(p);
            const RationalFn dH = eh_derivative(p);
            const RationalFn d2H = eh_second_derivative(p);
            for (const Rational& b : {q(1, 3), q(1), q(7, 4)}) {
                const Rational h(BigInt(1), BigInt(1000000));
                const double fd = ((H(b + h) - H(b - h)) / (q(2) * h)).to_double();
                const double fd2 = ((dH(b + h) - dH(b - h)) / (q(2) * h)).to_double();
                const double scale = std::abs(H(b).to_double()) / b.to_double() + 1.0;
                CAPTURE(p.to_string());
                CHECK(std::abs(fd - dH(b).to_double()) <= 1e-6 * (scale + std::abs(fd)));
                CHECK(std::abs(fd2 - d2H(b).to_double()) <= 1e-6 * (scale / b.to_double() + std::abs(fd2)));
            }
        }
    }
}

TEST_CASE("randomized identities") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const JoinParams p = testing::random_params(rng);
        const int d = p.dN;
        const UniPoly S = scalar_numerator(p);
        const UniPoly V = volume_numerator(p);
        const UniPoly variational = Rational(d + 2) * S.derivative() * bV(p) - Rational(d + 1) * S * bV(p).derivative();
        const UniPoly w = ints({-p.w2, p.w1});
        const DivRem division = poly_divrem(-f_polynomial(p), w.pow(3));
        CAPTURE(p.to_string());
        CHECK(division.remainder.is_zero());
        CHECK(division.quotient == variational);
        CHECK(f_csc(p) == variational);
        CHECK(f_polynomial(p).degree() == 2 * d + 4);
        CHECK(variational.degree() <= 2 * d + 1);
        for (const Rational& c : V.coefficients()) CHECK(c > q(0));
        CHECK(S.degree() == d + 1);
        CHECK(S.leading() == Rational(p.l1) * Rational(p.w1).pow(d));
        CHECK(S.coeff(0) == Rational(p.l1) * Rational(p.w2).pow(d));

        const RationalFn dH = eh_derivative(p);
        CHECK(dH.num() * var().pow(d + 2) * V.pow(d + 2) == S.pow(d + 1) * variational * dH.den());
        CHECK(dH == einstein_hilbert(p).derivative());

        const int mult = root_multiplicity(f_polynomial(p), q(p.w2, p.w1));
        if (p.w1 == p.w2)
            CHECK(mult >= 4);
        else
            CHECK(mult == 3);
    }
}

TEST_CASE("scale invariance") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const JoinParams p = testing::random_params(rng);
        const int d = p.dN;
        const Rational v1(std::uniform_int_distribution<long>(1, 20)(rng));
        const Rational v2(std::uniform_int_distribution<long>(1, 20)(rng));
        const Rational lambda(BigInt(std::uniform_int_distribution<long>(1, 9)(rng)), BigInt(std::uniform_int_distribution<long>(1, 9)(rng)));
        const Rational S = total_scalar_at(p, v1, v2);
        const Rational V = total_volume_at(p, v1, v2);
        CHECK(total_scalar_at(p, lambda * v1, lambda * v2) == S / lambda.pow(d + 1));
        CHECK(total_volume_at(p, lambda * v1, lambda * v2) == V / lambda.pow(d + 2));
        CHECK(S.pow(d + 2) / V.pow(d + 1) == einstein_hilbert(p)(v2 / v1));
    }
}

TEST_CASE("expanded form agrees off the regular ray") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const JoinParams p = testing::random_params(rng);
        const RationalFn H = einstein_hilbert(p);
        const RationalFn H2 = einstein_hilbert_expanded(p);
        for (const Rational& b : {q(1, 7), q(1, 2), q(1), q(5, 3), q(11)}) {
            if (b == q(p.w2, p.w1)) continue;
            CHECK(H2(b) == H(b));
        }
    }
}

TEST_CASE("boundary behavior") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const JoinParams p = testing::random_params(rng);
        const int d = p.dN;
        const RationalFn H = einstein_hilbert(p);
        CHECK(H.valuation_at_zero() == -(d + 1));
        CHECK(H.leading_at_zero() == Rational(p.l1).pow(d + 2) * Rational(p.w2).pow(d));
        CHECK(H.degree_at_infinity() == d + 1);
        CHECK(H.leading_at_infinity() == Rational(p.l1).pow(d + 2) * Rational(p.w1).pow(d));
    }
}

TEST_CASE("Futaki value") {
    CHECK(futaki_value(kBoth, RayId(BigInt(3), BigInt(2))) == q(0));
    CHECK(futaki_value(genus_two(101), RayId(BigInt(2), BigInt(1))).sign() < 0);
    const RayId ray(BigInt(2), BigInt(3));
    const Rational expected = f_csc(kTriple)(ray.b()) / (Rational(3).pow(7) * total_volume(kTriple, ray));
    CHECK(futaki_value(kTriple, ray) == expected);

    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 50; ++trial) {
        const JoinParams p = testing::random_params(rng);
        const RayId r = RayId::from_slope(Rational(BigInt(std::uniform_int_distribution<long>(1, 40)(rng)), BigInt(std::uniform_int_distribution<long>(1, 40)(rng))));
        CHECK(futaki_value(p, r).sign() == f_csc(p)(r.b()).sign());
    }
}

TEST_CASE("bundle") {
    const FunctionalBundle fb = FunctionalBundle::build(kTriple);
    CHECK(fb.S_num == scalar_numerator(kTriple));
    CHECK(fb.f_csc == f_csc(kTriple));
    CHECK(fb.dH_numerator() == fb.S_num.pow(3) * fb.f_csc);
    CHECK_THROWS_AS(FunctionalBundle::build({2, q(1), 1, 4, 3, 2}), DomainError);
}
