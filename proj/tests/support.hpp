#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "reeb/join.hpp"
#include "reeb/poly.hpp"

namespace reeb::testing {

inline UniPoly ints(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return UniPoly(std::move(c));
}

inline Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

inline const UniPoly& var() {
    static const UniPoly b = UniPoly::monomial(1, 1);
    return b;
}

/// Random valid join parameters: d_N <= max_dN, A in [-20, 20] with
/// denominator up to 4, l1, l2 <= 50, w2 <= w1 <= 30.
inline JoinParams random_params(std::mt19937_64& rng, int max_dN = 4) {
    while (true) {
        JoinParams p;
        p.dN = std::uniform_int_distribution<int>(1, max_dN)(rng);
        const long den = std::uniform_int_distribution<long>(1, 4)(rng);
        p.A = Rational(BigInt(std::uniform_int_distribution<long>(-20 * den, 20 * den)(rng)), BigInt(den));
        p.l1 = std::uniform_int_distribution<long>(1, 50)(rng);
        p.l2 = std::uniform_int_distribution<long>(1, 50)(rng);
        p.w1 = std::uniform_int_distribution<long>(1, 30)(rng);
        p.w2 = std::uniform_int_distribution<long>(1, p.w1)(rng);
        if (validate(p).empty()) return p;
    }
}

inline UniPoly random_poly(std::mt19937_64& rng, int max_degree, long max_coeff) {
    const int deg = std::uniform_int_distribution<int>(0, max_degree)(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(std::uniform_int_distribution<long>(-max_coeff, max_coeff)(rng));
    if (c.back().is_zero()) c.back() = Rational(1);
    return UniPoly(std::move(c));
}

}  // namespace reeb::testing
