#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reeb/extremal.hpp"
#include "reeb/functionals.hpp"
#include "reeb/roots.hpp"

namespace reeb {

enum class CriticalSource { FutakiZero, NullScalar, Both };
enum class Classification { LocalMin, LocalMax, Inflection, Degenerate };
enum class Verdict { KSemistableCscS, KUnstable };
enum class UnstableReason { None, NonCritical, CriticalNullScalar };

std::string to_string(CriticalSource s);
std::string to_string(Classification c);
std::string to_string(Verdict v);
std::string to_string(UnstableReason r);

/// A positive critical slope of H.
struct CriticalPoint {
    IsolatingInterval interval;  // refined; multiplicity is that in the H' numerator
    Rational approx;
    CriticalSource source = CriticalSource::FutakiZero;
    Classification classification = Classification::Inflection;
    int multiplicity_in_dH = 1;
    Rational left_probe;
    Rational right_probe;
    int left_sign = 0;   // sign of H' at left_probe
    int right_sign = 0;  // sign of H' at right_probe
    Verdict verdict = Verdict::KUnstable;
    UnstableReason reason = UnstableReason::None;
};

struct StabilityVerdict {
    std::optional<Rational> b;                  // exact rational slope, or
    std::optional<IsolatingInterval> interval;  // an isolated (possibly irrational) slope
    Verdict verdict = Verdict::KUnstable;
    UnstableReason reason = UnstableReason::None;
    bool near_csc = false;  // rational probe inside an isolating interval of a cscS slope
};

struct BoundaryRecord {
    int pole_order = 0;          // at b -> 0
    Rational pole_coefficient;   // leading Laurent coefficient at 0
    int growth_degree = 0;       // at b -> infinity
    Rational growth_coefficient;
};

struct ScanRow {
    long l2 = 0;
    int csc_rays = 0;
    int critical = 0;
    std::vector<Classification> classifications;
};

struct ReportOptions {
    Rational tolerance = Rational(1, BigInt("1000000000000"));
    /// Scan range for the extremal admissibility window, when requested.
    std::optional<std::pair<Rational, Rational>> extremal_range;
    int extremal_probes = 64;
};

struct ExtremalReport {
    Rational b_lo;
    Rational b_hi;
    std::optional<AdmissibilityWindow> window;
    std::string error;  // set when no transition was found
    std::vector<ExtremalSolution> solutions;  // for the requested rays
};

struct AnalysisReport {
    FunctionalBundle bundle;
    Rational tolerance;
    std::vector<CriticalPoint> critical_points;
    std::vector<IsolatingInterval> csc_rays;
    std::vector<IsolatingInterval> null_scalar_rays;
    std::vector<RayId> rays;
    std::vector<StabilityVerdict> verdicts;  // one per requested ray
    BoundaryRecord boundary;
    std::optional<ExtremalReport> extremal;
};

std::vector<CriticalPoint> critical_points(const FunctionalBundle& fb, const Rational& tol);
std::vector<CriticalPoint> critical_points(const JoinParams& params);

std::vector<IsolatingInterval> csc_rays(const JoinParams& params);
/// Positive zeros of the total scalar curvature; at most two.
std::vector<IsolatingInterval> null_scalar_rays(const JoinParams& params);

/// Verdict for an exact rational slope b > 0.
StabilityVerdict stability_verdict(const JoinParams& params, const Rational& b);
/// Verdict for the slope isolated by `iv` as a root of `poly`.
StabilityVerdict stability_verdict(const JoinParams& params, const UniPoly& poly, const IsolatingInterval& iv);

/// Throws InconsistencyError if H does not blow up positively at both ends.
BoundaryRecord boundary_check(const FunctionalBundle& fb);
BoundaryRecord boundary_check(const JoinParams& params);

/// One row per l2 in [l2_from, l2_to] with gcd(l2, w1 w2) = 1 (and gcd(l1, l2) = 1).
std::vector<ScanRow> scan_l2(const JoinParams& base, long l2_from, long l2_to);

AnalysisReport full_report(const JoinParams& params, const std::vector<RayId>& rays, const ReportOptions& opts = {});

}  // namespace reeb
