#pragma once

#include <string>
#include <vector>

#include "reeb/rational.hpp"

namespace reeb {

/// The join datum (d_N, A, l1, l2, w1, w2). The base N has complex dimension
/// d_N and constant scalar curvature 2 d_N A.
struct JoinParams {
    int dN = 1;
    Rational A;
    long l1 = 1;
    long l2 = 1;
    long w1 = 1;
    long w2 = 1;

    friend bool operator==(const JoinParams&, const JoinParams&) = default;
    std::string to_string() const;
};

/// Every violated invariant, named; empty means valid. Throws DomainError
/// when a field that must be positive is not.
std::vector<std::string> validate(const JoinParams& params);
/// Throws DomainError listing all violations.
void require_valid(const JoinParams& params);

/// Normalized base scalar curvature A for the two standard families.
Rational projective_space_A(int dN);
Rational riemann_surface_A(int genus);

/// A quasi-regular Reeb ray xi = v1 H1 + v2 H2 with gcd(v1, v2) = 1.
class RayId {
public:
    RayId(BigInt v1, BigInt v2);  // throws DomainError if non-positive or not coprime
    /// The ray of slope b = v2/v1 for a positive rational b.
    static RayId from_slope(const Rational& b);
    /// Best rational approximation with denominator <= max_den (irregular rays).
    static RayId approximate(double b, long max_den);

    const BigInt& v1() const { return v1_; }
    const BigInt& v2() const { return v2_; }
    Rational b() const { return Rational(v2_, v1_); }
    std::string to_string() const;
    friend bool operator==(const RayId&, const RayId&) = default;

private:
    BigInt v1_;
    BigInt v2_;
};

/// Orbifold quotient data of the join along a quasi-regular ray.
struct QuotientData {
    BigInt s;
    BigInt m;
    BigInt m1;
    BigInt m2;
    BigInt n_deg;
    Rational r;
    bool regular = false;
};

QuotientData quotient_data(const JoinParams& params, const RayId& ray);

/// The transverse complex dimension d_N + 1.
inline int transverse_dimension(const JoinParams& p) { return p.dN + 1; }

}  // namespace reeb
