#include "reeb/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace reeb {

UniPoly::UniPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_factor(const Rational& root) { return UniPoly({-root, Rational(1)}); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

int UniPoly::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    }
    return -1;
}

Rational UniPoly::operator()(const Rational& x) const {
    // Horner
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(out));
}

UniPoly UniPoly::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
    return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned exponent) const {
    UniPoly result = constant(1);
    UniPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    UniPoly out = *this;
    out *= Rational(1) / leading();
    return out;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    BigInt den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    BigInt num_gcd = 0;
    for (const auto& c : coeffs_) {
        const BigInt scaled = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    UniPoly out = *this;
    out *= Rational(den_lcm, num_gcd);
    return out;
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (!unit || k == 0) {
            if (mag.is_integer()) os << mag;
            else os << "(" << mag << ")";
        }
        if (k >= 1) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<std::string> UniPoly::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

DivRem poly_divrem(const UniPoly& p, const UniPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("zero divisor");
    std::vector<Rational> rem = p.coefficients();
    const int dd = d.degree();
    if (p.degree() < dd) return {UniPoly{}, p};
    std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dd + 1));
    const Rational inv_lead = Rational(1) / d.leading();
    for (int k = p.degree(); k >= dd; --k) {
        const Rational& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        const Rational q = top * inv_lead;
        quo[static_cast<std::size_t>(k - dd)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * d.coeff(j);
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = poly_divrem(a, b).remainder;
        a = std::move(b);
        b = r.primitive();  // positive rescale keeps intermediate sizes down
    }
    return a.monic();
}

UniPoly square_free_part(const UniPoly& p) {
    if (p.degree() <= 0) return p.monic();
    const UniPoly g = poly_gcd(p, p.derivative());
    return poly_divrem(p, g).quotient.monic();
}

}  // namespace reeb
