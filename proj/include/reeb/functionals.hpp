#pragma once

#include "reeb/join.hpp"
#include "reeb/poly.hpp"
#include "reeb/rational_fn.hpp"

namespace reeb {

// Closed forms on the w-cone, in the slope variable b = v2/v1. All of them
// drop the ray-independent positive factor 2^(d_N+1) (l1/l2)^(d_N); values
// are "normalized".

/// Numerator of the total transverse scalar curvature:
///   l2 A sum_{j=1..d_N} w1^(d_N-j) w2^(j-1) b^(d_N+1-j) + l1 (w1^d_N b^(d_N+1) + w2^d_N).
UniPoly scalar_numerator(const JoinParams& p);
/// Numerator of the volume: sum_{j=0..d_N} w1^(d_N-j) w2^j b^(d_N-j).
UniPoly volume_numerator(const JoinParams& p);

/// Total transverse scalar curvature of the ray.
Rational total_scalar(const JoinParams& p, const RayId& ray);
/// Total volume of the ray (always positive).
Rational total_volume(const JoinParams& p, const RayId& ray);
/// The same formulas for an arbitrary positive Reeb vector v1 H1 + v2 H2,
/// without the primitivity requirement; used to check scaling behavior.
Rational total_scalar_at(const JoinParams& p, const Rational& v1, const Rational& v2);
Rational total_volume_at(const JoinParams& p, const Rational& v1, const Rational& v2);

/// H = S_num^(d_N+2) / (b V_num)^(d_N+1), reduced.
RationalFn einstein_hilbert(const JoinParams& p);
/// The expanded-form variant valid off b = w2/w1; numerator and denominator
/// both carry the extra factor (w1 b - w2)^(d_N+2).
RationalFn einstein_hilbert_expanded(const JoinParams& p);

/// The degree 2 d_N + 4 polynomial f, assembled coefficient group by group.
UniPoly f_polynomial(const JoinParams& p);
/// f_CSC = (d_N+2) S' (bV) - (d_N+1) S (bV)', cross-checked against the
/// exact quotient -f / (w1 b - w2)^3. Throws InconsistencyError on mismatch.
UniPoly f_csc(const JoinParams& p);

/// Quotient-rule derivative of H, verified against
/// S^(d_N+1) f_CSC / (b^(d_N+2) V^(d_N+2)); throws InconsistencyError on failure.
RationalFn eh_derivative(const JoinParams& p);
RationalFn eh_second_derivative(const JoinParams& p);

/// Sasaki-Futaki invariant in the direction transversal to the ray, up to a
/// global positive constant: f_CSC(b) / (v2^(2 d_N + 3) V).
Rational futaki_value(const JoinParams& p, const RayId& ray);

/// Everything above for one parameter set, built once.
struct FunctionalBundle {
    JoinParams params;
    UniPoly S_num;
    UniPoly V_num;
    RationalFn H;
    UniPoly f;
    UniPoly f_csc;
    RationalFn dH;
    RationalFn d2H;

    /// Validates params and runs every cross-check.
    static FunctionalBundle build(const JoinParams& p);
    /// S_num^(d_N+1) f_CSC: the numerator of H' up to positive factors on b > 0.
    UniPoly dH_numerator() const;
};

}  // namespace reeb
