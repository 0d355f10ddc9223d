#include "reeb/rational.hpp"

#include <cctype>
#include <cmath>

#include "reeb/error.hpp"

namespace reeb {

namespace {

BigInt pow10(unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw DomainError("malformed rational '" + std::string(whole) + "'");
    return BigInt(std::string(s.front() == '+' ? s.substr(1) : s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::pow(unsigned exponent) const {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    return Rational(n, d);
}

Rational Rational::floor_value() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Rational(q);
}

Rational Rational::ceil_value() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Rational(q);
}

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw DomainError("malformed rational '" + std::string(whole) + "'");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt n = parse_integer(text.substr(0, slash), whole);
        std::string_view ds = text.substr(slash + 1);
        if (!all_digits(ds)) throw DomainError("malformed rational '" + std::string(whole) + "'");
        BigInt d(std::string{ds}, 10);
        if (d == 0) throw DomainError("zero denominator in '" + std::string(whole) + "'");
        return Rational(n, d);
    }

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = text.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6) throw DomainError("malformed rational '" + std::string(whole) + "'");
        exponent = std::stol(std::string(es)) * (eneg ? -1 : 1);
        text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
            throw DomainError("malformed rational '" + std::string(whole) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(text)) throw DomainError("malformed rational '" + std::string(whole) + "'");
        digits = std::string(text);
    }
    BigInt n(digits, 10);
    if (negative) n = -n;
    if (exponent >= 0) return Rational(BigInt(n * pow10(static_cast<unsigned long>(exponent))));
    return Rational(n, pow10(static_cast<unsigned long>(-exponent)));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 1) digits = 1;
    if (is_zero()) return "0";
    const mpq_class mag = ::abs(value_);

    // Decimal exponent e with 10^e <= |x| < 10^(e+1), corrected from the
    // floating estimate (which is exact up to off-by-one).
    long e = 0;
    {
        signed long exp2 = 0;
        const double mant = mpz_get_d_2exp(&exp2, value_.get_num_mpz_t());
        signed long dexp2 = 0;
        const double dmant = mpz_get_d_2exp(&dexp2, value_.get_den_mpz_t());
        const double log10v = std::log10(std::abs(mant) / dmant) + static_cast<double>(exp2 - dexp2) * std::log10(2.0);
        e = static_cast<long>(std::floor(log10v));
    }
    auto scaled_at = [&](long ex) {
        mpq_class s = mag;
        if (ex >= 0) s /= mpq_class(pow10(static_cast<unsigned long>(ex)));
        else s *= mpq_class(pow10(static_cast<unsigned long>(-ex)));
        return s;  // |x| / 10^ex
    };
    while (scaled_at(e) < 1) --e;
    while (scaled_at(e) >= 10) ++e;

    // N = round(|x| * 10^(digits-1-e)), half away from zero.
    auto rounded = [&](long ex) {
        const long shift = digits - 1 - ex;
        mpq_class s = mag;
        if (shift >= 0) s *= mpq_class(pow10(static_cast<unsigned long>(shift)));
        else s /= mpq_class(pow10(static_cast<unsigned long>(-shift)));
        s += mpq_class(1, 2);
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
        return q;
    };
    BigInt n = rounded(e);
    if (n == pow10(static_cast<unsigned long>(digits))) {
        ++e;
        n = rounded(e);
    }
    std::string ds = n.get_str();  // exactly `digits` characters
    const std::string sign = value_ < 0 ? "-" : "";

    auto trim = [](std::string s) {
        if (s.find('.') == std::string::npos) return s;
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };

    if (e < -5 || e >= digits) {
        std::string mant = ds.substr(0, 1) + "." + ds.substr(1);
        mant = trim(mant);
        std::string es = std::to_string(e < 0 ? -e : e);
        if (es.size() < 2) es = "0" + es;
        return sign + mant + (e < 0 ? "e-" : "e+") + es;
    }
    std::string out;
    if (e >= 0) {
        out = ds.substr(0, static_cast<std::size_t>(e + 1)) + "." + ds.substr(static_cast<std::size_t>(e + 1));
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    }
    return sign + trim(out);
}

}  // namespace reeb
