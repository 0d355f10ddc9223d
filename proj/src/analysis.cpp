#include "reeb/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "reeb/error.hpp"

namespace reeb {

std::string to_string(CriticalSource s) {
    switch (s) {
        case CriticalSource::FutakiZero: return "futaki-zero";
        case CriticalSource::NullScalar: return "null-scalar";
        case CriticalSource::Both: return "both";
    }
    return {};
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::LocalMin: return "local-min";
        case Classification::LocalMax: return "local-max";
        case Classification::Inflection: return "inflection";
        case Classification::Degenerate: return "degenerate";
    }
    return {};
}

std::string to_string(Verdict v) {
    return v == Verdict::KSemistableCscS ? "K-semistable-cscS" : "K-unstable";
}

std::string to_string(UnstableReason r) {
    switch (r) {
        case UnstableReason::None: return "";
        case UnstableReason::NonCritical: return "non-critical";
        case UnstableReason::CriticalNullScalar: return "critical-null-scalar-nonzero-Futaki";
    }
    return {};
}

namespace {

// Does `target` vanish at the root of `poly` isolated by iv?
bool vanishes_at(const UniPoly& target, const UniPoly& poly, const IsolatingInterval& iv) {
    if (iv.exact()) return target(iv.lo).is_zero();
    const UniPoly g = poly_gcd(square_free_part(poly), target);
    if (g.degree() < 1) return false;
    return sturm_count(g, iv.lo, iv.hi) - (g(iv.hi).is_zero() ? 1 : 0) > 0;
}

// Sign of H' on (0, inf): V and b are positive there.
int dH_sign(const FunctionalBundle& fb, const Rational& b) {
    const int s = fb.S_num.sign_at(b);
    const int f = fb.f_csc.sign_at(b);
    const int sp = (fb.params.dN + 1) % 2 == 0 ? s * s : s;
    return sp * f;
}

// A probe point beside iv with no root of the square-free H' numerator
// between it and the interval. Starts at offset = interval width and halves.
Rational flank_probe(const SturmSequence& sturm, const IsolatingInterval& iv, bool left) {
    const UniPoly& sqf = sturm.square_free();
    Rational offset = iv.exact() ? Rational(1, 8) : iv.width();
    while (true) {
        const Rational probe = left ? iv.lo - offset : iv.hi + offset;
        offset /= Rational(2);
        if (probe.sign() <= 0 || sqf(probe).is_zero()) continue;
        const int between = left ? sturm.count(probe, iv.lo) - (sqf(iv.lo).is_zero() ? 1 : 0)
                                 : sturm.count(iv.hi, probe);
        if (between == 0) return probe;
    }
}

}  // namespace

std::vector<CriticalPoint> critical_points(const FunctionalBundle& fb, const Rational& tol) {
    const UniPoly numerator = fb.dH_numerator();
    const SturmSequence sturm(numerator);
    std::vector<CriticalPoint> out;
    for (const auto& iv : isolate_positive_roots(numerator)) {
        CriticalPoint cp;
        const bool s_zero = vanishes_at(fb.S_num, numerator, iv);
        const bool f_zero = vanishes_at(fb.f_csc, numerator, iv);
        cp.source = s_zero && f_zero ? CriticalSource::Both
                                     : (s_zero ? CriticalSource::NullScalar : CriticalSource::FutakiZero);
        cp.multiplicity_in_dH = iv.multiplicity;
        cp.interval = refine_interval(numerator, iv, tol);
        cp.interval.multiplicity = iv.multiplicity;
        cp.approx = cp.interval.midpoint();
        cp.left_probe = flank_probe(sturm, cp.interval, true);
        cp.right_probe = flank_probe(sturm, cp.interval, false);
        cp.left_sign = dH_sign(fb, cp.left_probe);
        cp.right_sign = dH_sign(fb, cp.right_probe);
        if (cp.source == CriticalSource::Both) cp.classification = Classification::Degenerate;
        else if (cp.left_sign < 0 && cp.right_sign > 0) cp.classification = Classification::LocalMin;
        else if (cp.left_sign > 0 && cp.right_sign < 0) cp.classification = Classification::LocalMax;
        else cp.classification = Classification::Inflection;
        cp.verdict = f_zero ? Verdict::KSemistableCscS : Verdict::KUnstable;
        cp.reason = f_zero ? UnstableReason::None : UnstableReason::CriticalNullScalar;
        out.push_back(std::move(cp));
    }
    return out;
}

std::vector<CriticalPoint> critical_points(const JoinParams& params) {
    return critical_points(FunctionalBundle::build(params), ReportOptions{}.tolerance);
}

std::vector<IsolatingInterval> csc_rays(const JoinParams& params) {
    require_valid(params);
    return isolate_positive_roots(f_csc(params));
}

std::vector<IsolatingInterval> null_scalar_rays(const JoinParams& params) {
    require_valid(params);
    auto roots = isolate_positive_roots(scalar_numerator(params));
    if (roots.size() > 2) throw InconsistencyError("total scalar curvature with more than two positive zeros");
    return roots;
}

StabilityVerdict stability_verdict(const JoinParams& params, const Rational& b) {
    if (b.sign() <= 0) throw DomainError("slope must be positive");
    require_valid(params);
    const UniPoly fc = f_csc(params);
    StabilityVerdict v;
    v.b = b;
    if (fc(b).is_zero()) {
        v.verdict = Verdict::KSemistableCscS;
        return v;
    }
    v.verdict = Verdict::KUnstable;
    v.reason = scalar_numerator(params)(b).is_zero() ? UnstableReason::CriticalNullScalar : UnstableReason::NonCritical;
    for (const auto& iv : isolate_positive_roots(fc)) {
        if (!iv.exact() && iv.lo < b && b < iv.hi) v.near_csc = true;
    }
    return v;
}

StabilityVerdict stability_verdict(const JoinParams& params, const UniPoly& poly, const IsolatingInterval& iv) {
    require_valid(params);
    if (iv.exact()) {
        StabilityVerdict v = stability_verdict(params, iv.lo);
        v.b.reset();
        v.interval = iv;
        return v;
    }
    StabilityVerdict v;
    v.interval = iv;
    if (vanishes_at(f_csc(params), poly, iv)) {
        v.verdict = Verdict::KSemistableCscS;
        return v;
    }
    v.verdict = Verdict::KUnstable;
    v.reason = vanishes_at(scalar_numerator(params), poly, iv) ? UnstableReason::CriticalNullScalar
                                                                : UnstableReason::NonCritical;
    return v;
}

BoundaryRecord boundary_check(const FunctionalBundle& fb) {
    const int expected = fb.params.dN + 1;
    BoundaryRecord rec;
    rec.pole_order = -fb.H.valuation_at_zero();
    rec.pole_coefficient = fb.H.leading_at_zero();
    rec.growth_degree = fb.H.degree_at_infinity();
    rec.growth_coefficient = fb.H.leading_at_infinity();
    if (rec.pole_order != expected || rec.pole_coefficient.sign() <= 0 || rec.growth_degree != expected ||
        rec.growth_coefficient.sign() <= 0) {
        throw InconsistencyError("boundary behavior of H violated for " + fb.params.to_string());
    }
    return rec;
}

BoundaryRecord boundary_check(const JoinParams& params) { return boundary_check(FunctionalBundle::build(params)); }

std::vector<ScanRow> scan_l2(const JoinParams& base, long l2_from, long l2_to) {
    if (l2_from < 1 || l2_from > l2_to) throw DomainError("l2 range must be nonempty and positive");
    std::vector<ScanRow> rows;
    for (long l2 = l2_from; l2 <= l2_to; ++l2) {
        if (std::gcd(l2, base.w1 * base.w2) != 1 || std::gcd(l2, base.l1) != 1) continue;
        JoinParams p = base;
        p.l2 = l2;
        const FunctionalBundle fb = FunctionalBundle::build(p);
        ScanRow row;
        row.l2 = l2;
        row.csc_rays = static_cast<int>(isolate_positive_roots(fb.f_csc).size());
        const auto cps = critical_points(fb, Rational(1, 1000000));
        row.critical = static_cast<int>(cps.size());
        for (const auto& cp : cps) row.classifications.push_back(cp.classification);
        rows.push_back(std::move(row));
    }
    return rows;
}

AnalysisReport full_report(const JoinParams& params, const std::vector<RayId>& rays, const ReportOptions& opts) {
    AnalysisReport rep;
    rep.bundle = FunctionalBundle::build(params);
    rep.tolerance = opts.tolerance;
    rep.critical_points = critical_points(rep.bundle, opts.tolerance);
    for (const auto& iv : isolate_positive_roots(rep.bundle.f_csc)) {
        rep.csc_rays.push_back(refine_interval(rep.bundle.f_csc, iv, opts.tolerance));
    }
    for (const auto& iv : null_scalar_rays(params)) {
        rep.null_scalar_rays.push_back(refine_interval(rep.bundle.S_num, iv, opts.tolerance));
    }
    rep.rays = rays;
    for (const auto& ray : rays) rep.verdicts.push_back(stability_verdict(params, ray.b()));
    rep.boundary = boundary_check(rep.bundle);
    if (opts.extremal_range) {
        ExtremalReport ex;
        ex.b_lo = opts.extremal_range->first;
        ex.b_hi = opts.extremal_range->second;
        try {
            ex.window = admissibility_boundary(params, ex.b_lo, ex.b_hi, opts.tolerance, opts.extremal_probes);
        } catch (const DomainError& e) {
            ex.error = e.what();
        }
        for (const auto& ray : rays) {
            if (!quotient_data(params, ray).regular) ex.solutions.push_back(extremal_solution(params, ray));
        }
        rep.extremal = std::move(ex);
    }
    return rep;
}

}  // namespace reeb
