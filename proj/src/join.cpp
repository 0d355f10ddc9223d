#include "reeb/join.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "reeb/error.hpp"

namespace reeb {

std::string JoinParams::to_string() const {
    std::ostringstream os;
    os << "d_N=" << dN << " A=" << A << " l=(" << l1 << "," << l2 << ") w=(" << w1 << "," << w2 << ")";
    return os.str();
}

std::vector<std::string> validate(const JoinParams& p) {
    std::vector<std::string> bad;
    if (p.dN < 1) bad.push_back("dN");
    if (p.l1 < 1) bad.push_back("l1");
    if (p.l2 < 1) bad.push_back("l2");
    if (p.w1 < 1) bad.push_back("w1");
    if (p.w2 < 1) bad.push_back("w2");
    if (!bad.empty()) {
        std::string msg = "out of domain: non-positive";
        for (const auto& f : bad) msg += " " + f;
        throw DomainError(msg);
    }
    std::vector<std::string> violations;
    if (std::gcd(p.l1, p.l2) != 1) violations.emplace_back("gcd(l1, l2) != 1");
    if (std::gcd(p.w1, p.w2) != 1) violations.emplace_back("gcd(w1, w2) != 1");
    if (p.w1 < p.w2) violations.emplace_back("w1 >= w2 fails");
    if (std::gcd(p.l2, p.w1 * p.w2) != 1) violations.emplace_back("gcd(l2, w1w2) != 1");
    return violations;
}

void require_valid(const JoinParams& params) {
    const auto v = validate(params);
    if (v.empty()) return;
    std::string msg;
    for (const auto& s : v) msg += (msg.empty() ? "" : "; ") + s;
    throw DomainError(msg);
}

Rational projective_space_A(int dN) {
    if (dN < 1) throw DomainError("out of domain: dN must be positive");
    return Rational(dN + 1);
}

Rational riemann_surface_A(int genus) {
    if (genus < 0) throw DomainError("out of domain: genus must be non-negative");
    return Rational(2 * (1 - genus));
}

RayId::RayId(BigInt v1, BigInt v2) : v1_(std::move(v1)), v2_(std::move(v2)) {
    if (v1_ <= 0 || v2_ <= 0) throw DomainError("ray components must be positive");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), v1_.get_mpz_t(), v2_.get_mpz_t());
    if (g != 1) {
        throw DomainError("ray (" + v1_.get_str() + "," + v2_.get_str() + ") is not primitive: gcd = " + g.get_str());
    }
}

RayId RayId::from_slope(const Rational& b) {
    if (b.sign() <= 0) throw DomainError("ray slope must be positive");
    return RayId(b.den(), b.num());
}

RayId RayId::approximate(double b, long max_den) {
    if (!(b > 0) || !std::isfinite(b)) throw DomainError("ray slope must be positive and finite");
    if (max_den < 1) throw DomainError("denominator bound must be positive");
    // Continued-fraction convergents, stopping before the bound is exceeded;
    // then the best semiconvergent under the bound.
    const Rational x = Rational(mpq_class(b));
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rational rest = x;
    while (true) {
        const BigInt a = rest.floor_value().num();
        const BigInt p2 = a * p1 + p0;
        const BigInt q2 = a * q1 + q0;
        if (q2 > max_den) {
            const BigInt k = (BigInt(max_den) - q0) / q1;
            const BigInt ps = k * p1 + p0;
            const BigInt qs = k * q1 + q0;
            Rational best(p1, q1);
            if (qs > 0 && ps > 0) {
                const Rational semi(ps, qs);
                if ((semi - x).abs() < (best - x).abs()) best = semi;
            }
            if (best.sign() <= 0) best = Rational(1, max_den);
            return from_slope(best);
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const Rational frac = rest - Rational(a);
        if (frac.is_zero()) return from_slope(Rational(p1, q1));
        rest = Rational(1) / frac;
    }
}

std::string RayId::to_string() const { return "(" + v1_.get_str() + "," + v2_.get_str() + ")"; }

QuotientData quotient_data(const JoinParams& p, const RayId& ray) {
    const BigInt w1 = p.w1;
    const BigInt w2 = p.w2;
    const BigInt l2 = p.l2;
    const BigInt cross = w1 * ray.v2() - w2 * ray.v1();  // w1 v2 - w2 v1
    QuotientData q;
    BigInt abs_cross = abs(cross);
    mpz_gcd(q.s.get_mpz_t(), abs_cross.get_mpz_t(), l2.get_mpz_t());  // gcd(0, l2) = l2
    q.m = l2 / q.s;
    q.m1 = ray.v1() * q.m;
    q.m2 = ray.v2() * q.m;
    q.regular = cross == 0;
    q.n_deg = BigInt(p.l1) * cross / q.s;
    q.r = Rational(cross, w1 * ray.v2() + w2 * ray.v1());
    return q;
}

}  // namespace reeb
