#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "reeb/rational.hpp"

namespace reeb {

/// Dense univariate polynomial over exact rationals. Coefficients are stored
/// in ascending degree order and trimmed so the leading coefficient is
/// nonzero; the zero polynomial has no coefficients and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> ascending);
    explicit UniPoly(std::vector<Rational> ascending);
    static UniPoly constant(const Rational& c);
    /// c * x^k
    static UniPoly monomial(const Rational& c, int k);
    /// x - root
    static UniPoly linear_factor(const Rational& root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^k (zero beyond the degree).
    Rational coeff(int k) const;
    Rational leading() const;
    /// Lowest k with a nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;

    Rational operator()(const Rational& x) const;
    int sign_at(const Rational& x) const { return (*this)(x).sign(); }

    UniPoly derivative() const;
    /// Antiderivative with zero constant term.
    UniPoly antiderivative() const;
    UniPoly pow(unsigned exponent) const;
    UniPoly monic() const;
    /// Positive rescale to integer coefficients with gcd 1 (sign preserved).
    UniPoly primitive() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Human-readable, descending powers in variable `var`.
    std::string to_string(const std::string& var = "b") const;
    /// Ascending coefficients as "p/q" strings.
    std::vector<std::string> coefficient_strings() const;

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivRem {
    UniPoly quotient;
    UniPoly remainder;
};

/// Exact long division p = q*d + r with deg r < deg d. Throws
/// std::invalid_argument("zero divisor") when d is zero.
DivRem poly_divrem(const UniPoly& p, const UniPoly& d);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// p / gcd(p, p'), made monic.
UniPoly square_free_part(const UniPoly& p);

}  // namespace reeb
