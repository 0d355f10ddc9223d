#pragma once

#include <ostream>
#include <string>

#include "reeb/poly.hpp"

namespace reeb {

/// Reduced quotient num/den of polynomials. The denominator is rescaled to a
/// primitive integer polynomial with positive leading coefficient, so equal
/// functions have identical representations.
class RationalFn {
public:
    RationalFn() : num_(), den_(UniPoly::constant(1)) {}
    RationalFn(UniPoly num, UniPoly den);  // throws std::invalid_argument on den == 0
    explicit RationalFn(UniPoly p) : RationalFn(std::move(p), UniPoly::constant(1)) {}

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Throws DomainError at a pole.
    Rational operator()(const Rational& x) const;
    RationalFn derivative() const;

    /// Order of vanishing at 0 (negative for a pole); for the zero function 0.
    int valuation_at_zero() const;
    /// Leading Laurent coefficient at 0.
    Rational leading_at_zero() const;
    /// deg num - deg den.
    int degree_at_infinity() const;
    Rational leading_at_infinity() const;

    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend bool operator==(const RationalFn&, const RationalFn&) = default;

    std::string to_string(const std::string& var = "b") const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFn& f) { return os << f.to_string(); }

private:
    UniPoly num_;
    UniPoly den_;
};

/// True when a/b and c/d agree as rational functions (cross-multiplication).
bool same_function(const UniPoly& a, const UniPoly& b, const UniPoly& c, const UniPoly& d);

}  // namespace reeb
