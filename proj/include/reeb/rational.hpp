#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace reeb {

using BigInt = mpz_class;

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (zero is 0/1).
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long v) : value_(BigInt(std::to_string(v))) {}  // NOLINT
    Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Accepts "p", "p/q", and decimals such as "-0.835" or "1e-12"; decimals
    /// are converted exactly. Throws DomainError on anything else.
    static Rational parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    Rational pow(unsigned exponent) const;
    Rational floor_value() const;
    Rational ceil_value() const;

    double to_double() const { return value_.get_d(); }
    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    /// Correctly rounded (half away from zero) decimal with `digits`
    /// significant digits, %g-style: fixed notation for exponents in
    /// [-5, digits), scientific otherwise, trailing zeros trimmed.
    std::string to_decimal(int digits = 17) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

inline Rational operator""_q(unsigned long long v) { return Rational(BigInt(std::to_string(v))); }

}  // namespace reeb
