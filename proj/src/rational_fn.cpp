#include "reeb/rational_fn.hpp"

#include <stdexcept>

#include "reeb/error.hpp"

namespace reeb {

RationalFn::RationalFn(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = {};
        den_ = UniPoly::constant(1);
        return;
    }
    const UniPoly g = poly_gcd(num, den);
    num = poly_divrem(num, g).quotient;
    den = poly_divrem(den, g).quotient;
    const UniPoly prim = den.primitive();
    Rational scale = prim.leading() / den.leading();  // positive by construction of primitive()
    if (prim.leading().sign() < 0) scale = -scale;
    num_ = num * scale;
    den_ = den * scale;
}

Rational RationalFn::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d.is_zero()) throw DomainError("rational function evaluated at a pole " + x.to_string());
    return num_(x) / d;
}

RationalFn RationalFn::derivative() const {
    return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

int RationalFn::valuation_at_zero() const {
    if (num_.is_zero()) return 0;
    return num_.valuation() - den_.valuation();
}

Rational RationalFn::leading_at_zero() const {
    if (num_.is_zero()) return Rational(0);
    return num_.coeff(num_.valuation()) / den_.coeff(den_.valuation());
}

int RationalFn::degree_at_infinity() const { return num_.degree() - den_.degree(); }

Rational RationalFn::leading_at_infinity() const {
    if (num_.is_zero()) return Rational(0);
    return num_.leading() / den_.leading();
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

std::string RationalFn::to_string(const std::string& var) const {
    if (den_ == UniPoly::constant(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

bool same_function(const UniPoly& a, const UniPoly& b, const UniPoly& c, const UniPoly& d) {
    return a * d == c * b;
}

}  // namespace reeb
