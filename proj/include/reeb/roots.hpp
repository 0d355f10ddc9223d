#pragma once

#include <string>
#include <vector>

#include "reeb/poly.hpp"

namespace reeb {

/// A point of the extended rational line, used as a Sturm-count endpoint.
class Bound {
public:
    enum class Kind { NegInf, Finite, PosInf };

    Bound(const Rational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(google-explicit-constructor)
    Bound(int v) : Bound(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    static Bound neg_inf() { return Bound(Kind::NegInf); }
    static Bound pos_inf() { return Bound(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    const Rational& value() const { return value_; }
    /// sign of p at this point (limit sign at infinity).
    int sign_of(const UniPoly& p) const;
    std::string to_string() const;

private:
    explicit Bound(Kind k) : kind_(k) {}
    Kind kind_;
    Rational value_;
};

bool operator<(const Bound& a, const Bound& b);

/// Interval [lo, hi] isolating one distinct real root of some polynomial.
/// lo == hi marks an exact rational root.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Sturm chain of the square-free part of a polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const UniPoly& p);
    int variations(const Bound& x) const;
    /// Distinct real roots in (lo, hi].
    int count(const Bound& lo, const Bound& hi) const;
    const UniPoly& square_free() const { return chain_.front(); }

private:
    std::vector<UniPoly> chain_;
};

/// Number of distinct real roots of p in (lo, hi].
int sturm_count(const UniPoly& p, const Bound& lo, const Bound& hi);

/// Sign variations among the nonzero coefficients.
int descartes_positive_bound(const UniPoly& p);

/// Largest k with (x - root)^k dividing p.
int root_multiplicity(const UniPoly& p, const Rational& root);

/// Multiplicity in p of the single root of p located in `iv`; 0 if p has no
/// root there. Requires that `iv` contains at most one root of p and, when
/// lo < hi, that neither endpoint is a root.
int multiplicity_on(const UniPoly& p, const IsolatingInterval& iv);

/// Disjoint isolating intervals for the distinct roots of p in (0, inf),
/// ascending, each carrying its multiplicity in p.
std::vector<IsolatingInterval> isolate_positive_roots(const UniPoly& p);

/// Bisection of `iv` down to width <= tol; still brackets the root.
IsolatingInterval refine_interval(const UniPoly& p, const IsolatingInterval& iv, const Rational& tol);
/// Midpoint of refine_interval.
Rational refine_root(const UniPoly& p, const IsolatingInterval& iv, const Rational& tol);

struct PositivityResult {
    bool positive = false;
    std::string diagnostic;
    explicit operator bool() const { return positive; }
};

/// Decides p(z) > 0 for all lo < z < hi exactly. Zeros at the endpoints are
/// allowed.
PositivityResult positive_on_open_interval(const UniPoly& p, const Rational& lo, const Rational& hi);

}  // namespace reeb
