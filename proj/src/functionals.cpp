#include "reeb/functionals.hpp"

#include "reeb/error.hpp"

namespace reeb {

namespace {

Rational ipow(long base, int e) { return Rational(base).pow(static_cast<unsigned>(e)); }

UniPoly b_poly() { return UniPoly::monomial(1, 1); }


}  // namespace

UniPoly scalar_numerator(const JoinParams& p) {
    const int d = p.dN;
    UniPoly out = UniPoly::monomial(Rational(p.l1) * ipow(p.w1, d), d + 1) + UniPoly::constant(Rational(p.l1) * ipow(p.w2, d));
    const Rational l2A = Rational(p.l2) * p.A;
    for (int j = 1; j <= d; ++j) out += UniPoly::monomial(l2A * ipow(p.w1, d - j) * ipow(p.w2, j - 1), d + 1 - j);
    return out;
}

UniPoly volume_numerator(const JoinParams& p) {
    const int d = p.dN;
    UniPoly out;
    for (int j = 0; j <= d; ++j) out += UniPoly::monomial(ipow(p.w1, d - j) * ipow(p.w2, j), d - j);
    return out;
}

Rational total_scalar_at(const JoinParams& p, const Rational& v1, const Rational& v2) {
    if (v1.sign() <= 0 || v2.sign() <= 0) throw DomainError("Reeb vector components must be positive");
    const Rational b = v2 / v1;
    const auto e = static_cast<unsigned>(p.dN + 1);
    return scalar_numerator(p)(b) / (v1.pow(e) * b.pow(e));
}

Rational total_volume_at(const JoinParams& p, const Rational& v1, const Rational& v2) {
    if (v1.sign() <= 0 || v2.sign() <= 0) throw DomainError("Reeb vector components must be positive");
    const Rational b = v2 / v1;
    return volume_numerator(p)(b) / (v1.pow(static_cast<unsigned>(p.dN + 2)) * b.pow(static_cast<unsigned>(p.dN + 1)));
}

Rational total_scalar(const JoinParams& p, const RayId& ray) {
    require_valid(p);
    return total_scalar_at(p, Rational(ray.v1()), Rational(ray.v2()));
}

Rational total_volume(const JoinParams& p, const RayId& ray) {
    require_valid(p);
    return total_volume_at(p, Rational(ray.v1()), Rational(ray.v2()));
}

RationalFn einstein_hilbert(const JoinParams& p) {
    const auto d = static_cast<unsigned>(p.dN);
    return RationalFn(scalar_numerator(p).pow(d + 2), (b_poly() * volume_numerator(p)).pow(d + 1));
}

RationalFn einstein_hilbert_expanded(const JoinParams& p) {
    const int d = p.dN;
    const Rational l1 = p.l1, l2A = Rational(p.l2) * p.A;
    const Rational w1 = p.w1, w2 = p.w2;
    UniPoly top = UniPoly::monomial(l1 * w1.pow(d + 1), d + 2)
                + UniPoly::monomial((l2A - l1 * w2) * w1.pow(d), d + 1)
                + UniPoly::monomial((l1 * w1 - l2A) * w2.pow(d), 1)
                + UniPoly::constant(-l1 * w2.pow(d + 1));
    const UniPoly lin = UniPoly({-w2, w1});
    const UniPoly inner = UniPoly::monomial(w1.pow(d + 1), d + 2) - UniPoly::monomial(w2.pow(d + 1), 1);
    return RationalFn(top.pow(static_cast<unsigned>(d + 2)), lin * inner.pow(static_cast<unsigned>(d + 1)));
}

UniPoly f_polynomial(const JoinParams& p) {
    const int d = p.dN;
    const Rational D = d;
    const Rational D1 = d + 1, D2 = d + 2;
    const Rational A = p.A, l1 = p.l1, l2 = p.l2;
    const Rational w1 = p.w1, w2 = p.w2;
    auto pw = [](const Rational& x, int e) { return x.pow(static_cast<unsigned>(e)); };

    UniPoly f;
    f += UniPoly::monomial(-D1 * l1 * pw(w1, 2 * d + 3), 2 * d + 4);
    f += UniPoly::monomial(pw(w1, 2 * (d + 1)) * (A * l2 + l1 * D1 * w2), 2 * d + 3);
    f += UniPoly::monomial(-pw(w1, d + 2) * pw(w2, d) * (D1 * (A * D1 * l2 - l1 * (D1 * w1 + D2 * w2))), d + 3);
    f += UniPoly::monomial(pw(w1, d + 1) * pw(w2, d + 1) *
                               (Rational(2) * A * D * D2 * l2 - D1 * (Rational(2) * D + Rational(3)) * l1 * (w1 + w2)),
                           d + 2);
    f += UniPoly::monomial(-pw(w1, d) * pw(w2, d + 2) * D1 * (A * D1 * l2 - l1 * (D2 * w1 + D1 * w2)), d + 1);
    f += UniPoly::monomial(pw(w2, 2 * (d + 1)) * (A * l2 + l1 * D1 * w1), 1);
    f += UniPoly::constant(-D1 * l1 * pw(w2, 2 * d + 3));
    return f;
}

UniPoly f_csc(const JoinParams& p) {
    const int d = p.dN;
    const UniPoly S = scalar_numerator(p);
    const UniPoly bV = b_poly() * volume_numerator(p);
    UniPoly variational = Rational(d + 2) * S.derivative() * bV - Rational(d + 1) * S * bV.derivative();

    const UniPoly cube = UniPoly({Rational(-p.w2), Rational(p.w1)}).pow(3);
    const DivRem dr = poly_divrem(-f_polynomial(p), cube);
    if (!dr.remainder.is_zero() || dr.quotient != variational) {
        throw InconsistencyError("closed-form inconsistency: variational f_csc = " + variational.to_string() +
                                 " but -f/(w1 b - w2)^3 = " + dr.quotient.to_string() + " rem " +
                                 dr.remainder.to_string());
    }
    return variational;
}

RationalFn eh_derivative(const JoinParams& p) {
    const auto d = static_cast<unsigned>(p.dN);
    const RationalFn dH = einstein_hilbert(p).derivative();
    const UniPoly num = scalar_numerator(p).pow(d + 1) * f_csc(p);
    const UniPoly den = UniPoly::monomial(1, static_cast<int>(d + 2)) * volume_numerator(p).pow(d + 2);
    if (!same_function(dH.num(), dH.den(), num, den)) {
        throw InconsistencyError("closed-form inconsistency: H' = " + dH.to_string() +
                                 " differs from S^(d+1) f_csc / (b^(d+2) V^(d+2))");
    }
    return dH;
}

RationalFn eh_second_derivative(const JoinParams& p) { return eh_derivative(p).derivative(); }

Rational futaki_value(const JoinParams& p, const RayId& ray) {
    const Rational v2 = Rational(ray.v2());
    return f_csc(p)(ray.b()) / (v2.pow(static_cast<unsigned>(2 * p.dN + 3)) * total_volume(p, ray));
}

FunctionalBundle FunctionalBundle::build(const JoinParams& p) {
    require_valid(p);
    FunctionalBundle fb;
    fb.params = p;
    fb.S_num = scalar_numerator(p);
    fb.V_num = volume_numerator(p);
    fb.H = einstein_hilbert(p);
    fb.f = f_polynomial(p);
    fb.f_csc = reeb::f_csc(p);
    fb.dH = eh_derivative(p);
    fb.d2H = fb.dH.derivative();
    return fb;
}

UniPoly FunctionalBundle::dH_numerator() const {
    return S_num.pow(static_cast<unsigned>(params.dN + 1)) * f_csc;
}

}  // namespace reeb
