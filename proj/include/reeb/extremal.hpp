#pragma once

#include <optional>

#include "reeb/join.hpp"
#include "reeb/poly.hpp"

namespace reeb {

/// Extremal profile on the quotient of a quasi-regular ray: F(z) on [-1, 1]
/// with affine scalar curvature alpha + beta z and the endpoint conditions
///   F(+-1) = 0,  F'(-1) = 2 (1-r)^d_N / m2,  F'(1) = -2 (1+r)^d_N / m1.
struct ExtremalSolution {
    RayId ray;
    QuotientData quotient;
    Rational s_N;  // A / n_deg
    Rational alpha;
    Rational beta;
    UniPoly F;
    bool admissible = false;
};

/// Throws DomainError for the regular ray b = w2/w1 and InconsistencyError if
/// the endpoint system is singular.
ExtremalSolution extremal_solution(const JoinParams& params, const RayId& ray);

/// F > 0 on the open interval (-1, 1), decided exactly.
bool is_admissible(const ExtremalSolution& sol);

/// F'' + (alpha + beta z)(1 + r z)^d_N - 2 d_N s_N r (1 + r z)^(d_N-1); zero for
/// a correct solution.
UniPoly ode_residual(const JoinParams& params, const ExtremalSolution& sol);

/// A bracket [lo, hi] of width <= tol around a change of admissibility.
struct Transition {
    Rational lo;
    Rational hi;
    Rational estimate() const { return (lo + hi) / Rational(2); }
};

struct AdmissibilityWindow {
    std::optional<Transition> lower;  // not admissible -> admissible
    std::optional<Transition> upper;  // admissible -> not admissible
};

/// Scans `probes` evenly spaced rational slopes in [b_lo, b_hi], then bisects
/// the first entry into and the last exit from the admissible region.
/// Throws DomainError("no admissibility transition found") if neither exists.
AdmissibilityWindow admissibility_boundary(const JoinParams& params, const Rational& b_lo, const Rational& b_hi,
                                           const Rational& tol, int probes = 64);

/// Admissibility of the ray of slope b (b != w2/w1).
bool admissible_at(const JoinParams& params, const Rational& b);

}  // namespace reeb
