#include <sstream>

#include "reeb/cli.hpp"

namespace reeb::cli {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

json poly_json(const UniPoly& p) { return p.coefficient_strings(); }

json ratfn_json(const RationalFn& f) { return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

json interval_json(const IsolatingInterval& iv) {
    return {{"lo", iv.lo.to_string()},
            {"hi", iv.hi.to_string()},
            {"multiplicity", iv.multiplicity},
            {"exact", iv.exact()},
            {"approx", iv.midpoint().to_decimal(17)}};
}

json params_json(const JoinParams& p) {
    return {{"dN", p.dN}, {"A", p.A.to_string()}, {"l1", p.l1}, {"l2", p.l2}, {"w1", p.w1}, {"w2", p.w2}};
}

json verdict_json(const StabilityVerdict& v) {
    json j{{"verdict", to_string(v.verdict)}, {"up_to_isotopy", true}};
    if (v.b) j["b"] = v.b->to_string();
    if (v.interval) j["interval"] = interval_json(*v.interval);
    if (v.reason != UnstableReason::None) j["reason"] = to_string(v.reason);
    if (v.near_csc) j["near_csc"] = true;
    return j;
}

json transition_json(const Transition& t) {
    return {{"lo", t.lo.to_string()}, {"hi", t.hi.to_string()}, {"approx", t.estimate().to_decimal(17)}};
}

std::string sign_char(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

}  // namespace

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json extremal_to_json(const ExtremalSolution& sol) {
    const auto& q = sol.quotient;
    return {{"ray", {sol.ray.v1().get_str(), sol.ray.v2().get_str()}},
            {"b", sol.ray.b().to_string()},
            {"quotient",
             {{"s", q.s.get_str()},
              {"m", q.m.get_str()},
              {"m1", q.m1.get_str()},
              {"m2", q.m2.get_str()},
              {"n_deg", q.n_deg.get_str()},
              {"r", q.r.to_string()}}},
            {"s_N", sol.s_N.to_string()},
            {"alpha", sol.alpha.to_string()},
            {"beta", sol.beta.to_string()},
            {"F", poly_json(sol.F)},
            {"admissible", sol.admissible}};
}

json extremal_report_json(const ExtremalReport& ex) {
    json e{{"scan", {{"b_lo", ex.b_lo.to_string()}, {"b_hi", ex.b_hi.to_string()}}}};
    if (ex.window) {
        e["window"] = {{"lower", ex.window->lower ? transition_json(*ex.window->lower) : json(nullptr)},
                       {"upper", ex.window->upper ? transition_json(*ex.window->upper) : json(nullptr)}};
    } else {
        e["window"] = nullptr;
        e["error"] = ex.error;
    }
    e["solutions"] = json::array();
    for (const auto& s : ex.solutions) e["solutions"].push_back(extremal_to_json(s));
    return e;
}

json report_to_json(const AnalysisReport& rep) {
    const auto& fb = rep.bundle;
    json j;
    j["params"] = params_json(fb.params);
    j["polynomials"] = {{"S_num", poly_json(fb.S_num)}, {"V_num", poly_json(fb.V_num)}, {"f", poly_json(fb.f)},
                        {"f_csc", poly_json(fb.f_csc)},  {"H", ratfn_json(fb.H)},         {"dH", ratfn_json(fb.dH)}};
    json cps = json::array();
    for (const auto& cp : rep.critical_points) {
        json c{{"interval", interval_json(cp.interval)},
               {"approx", cp.approx.to_decimal(17)},
               {"source", to_string(cp.source)},
               {"classification", to_string(cp.classification)},
               {"multiplicity_in_dH", cp.multiplicity_in_dH},
               {"flank",
                {{"left_probe", cp.left_probe.to_string()},
                 {"left_sign", cp.left_sign},
                 {"right_probe", cp.right_probe.to_string()},
                 {"right_sign", cp.right_sign}}},
               {"verdict", to_string(cp.verdict)}};
        if (cp.reason != UnstableReason::None) c["reason"] = to_string(cp.reason);
        cps.push_back(std::move(c));
    }
    j["critical_points"] = std::move(cps);
    j["csc_rays"] = json::array();
    for (const auto& iv : rep.csc_rays) j["csc_rays"].push_back(interval_json(iv));
    j["null_scalar_rays"] = json::array();
    for (const auto& iv : rep.null_scalar_rays) j["null_scalar_rays"].push_back(interval_json(iv));
    if (!rep.verdicts.empty()) {
        json vs = json::array();
        for (std::size_t i = 0; i < rep.verdicts.size(); ++i) {
            json v = verdict_json(rep.verdicts[i]);
            const RayId& ray = rep.rays[i];
            v["ray"] = {ray.v1().get_str(), ray.v2().get_str()};
            v["futaki"] = futaki_value(fb.params, ray).to_string();
            v["total_scalar"] = total_scalar(fb.params, ray).to_string();
            v["total_volume"] = total_volume(fb.params, ray).to_string();
            vs.push_back(std::move(v));
        }
        j["verdicts"] = std::move(vs);
    }
    j["extremal"] = rep.extremal ? extremal_report_json(*rep.extremal) : json(nullptr);
    j["meta"] = {{"tool", "reebcone"},
                 {"version", kVersion},
                 {"tolerance", rep.tolerance.to_string()},
                 {"normalization", "normalized: ray-independent positive factor 2^(dN+1) (l1/l2)^dN dropped"},
                 {"boundary",
                  {{"pole_order_at_0", rep.boundary.pole_order},
                   {"pole_coefficient", rep.boundary.pole_coefficient.to_string()},
                   {"growth_degree_at_infinity", rep.boundary.growth_degree},
                   {"growth_coefficient", rep.boundary.growth_coefficient.to_string()},
                   {"limits", "H -> +inf as b -> 0 and as b -> +inf"}}},
                 {"notes",
                  {"verdicts hold up to isotopy",
                   "if the Sasaki-Futaki invariant vanishes on the w-subalgebra it vanishes identically"}}};
    return j;
}

std::string report_to_text(const AnalysisReport& rep) {
    const auto& fb = rep.bundle;
    std::ostringstream os;
    os << "join " << fb.params.to_string() << "\n";
    os << "S_num(b) = " << fb.S_num << "\n";
    os << "V_num(b) = " << fb.V_num << "\n";
    os << "H(b)     = " << fb.H << "\n";
    os << "f_csc(b) = " << fb.f_csc << "\n";
    os << "boundary: pole order " << rep.boundary.pole_order << " at 0 (coefficient " << rep.boundary.pole_coefficient
       << "), growth degree " << rep.boundary.growth_degree << " at infinity (coefficient "
       << rep.boundary.growth_coefficient << ")\n";
    os << "critical points (" << rep.critical_points.size() << "):\n";
    for (const auto& cp : rep.critical_points) {
        os << "  b ~ " << cp.approx.to_decimal(12) << "  in [" << cp.interval.lo << ", " << cp.interval.hi << "]  "
           << to_string(cp.source) << "  " << to_string(cp.classification) << "  H' signs (" << sign_char(cp.left_sign)
           << "," << sign_char(cp.right_sign) << ")  mult " << cp.multiplicity_in_dH << "  " << to_string(cp.verdict);
        if (cp.reason != UnstableReason::None) os << " (" << to_string(cp.reason) << ")";
        os << "\n";
    }
    os << "cscS rays (" << rep.csc_rays.size() << "):\n";
    for (const auto& iv : rep.csc_rays) {
        os << "  b ~ " << iv.midpoint().to_decimal(12) << "  in [" << iv.lo << ", " << iv.hi << "]  mult "
           << iv.multiplicity << "\n";
    }
    os << "null-scalar rays (" << rep.null_scalar_rays.size() << "):\n";
    for (const auto& iv : rep.null_scalar_rays) {
        os << "  b ~ " << iv.midpoint().to_decimal(12) << "  in [" << iv.lo << ", " << iv.hi << "]  mult "
           << iv.multiplicity << "\n";
    }
    if (!rep.verdicts.empty()) {
        os << "verdicts (up to isotopy):\n";
        for (std::size_t i = 0; i < rep.verdicts.size(); ++i) {
            const auto& v = rep.verdicts[i];
            os << "  ray " << rep.rays[i].to_string() << " b = " << rep.rays[i].b() << ": " << to_string(v.verdict);
            if (v.reason != UnstableReason::None) os << " (" << to_string(v.reason) << ")";
            if (v.near_csc) os << " [near-csc]";
            os << "\n";
        }
    }
    if (rep.extremal) {
        const auto& ex = *rep.extremal;
        os << "extremal admissibility over [" << ex.b_lo << ", " << ex.b_hi << "]:\n";
        if (ex.window) {
            if (ex.window->lower) {
                os << "  enters at b ~ " << ex.window->lower->estimate().to_decimal(12) << "  in [" << ex.window->lower->lo
                   << ", " << ex.window->lower->hi << "]\n";
            }
            if (ex.window->upper) {
                os << "  leaves at b ~ " << ex.window->upper->estimate().to_decimal(12) << "  in [" << ex.window->upper->lo
                   << ", " << ex.window->upper->hi << "]\n";
            }
        } else {
            os << "  " << ex.error << "\n";
        }
        for (const auto& s : ex.solutions) {
            os << "  ray " << s.ray.to_string() << ": alpha = " << s.alpha << ", beta = " << s.beta << ", F(z) = "
               << s.F.to_string("z") << "  " << (s.admissible ? "admissible" : "not admissible") << "\n";
        }
    }
    os << "(values normalized; verdicts up to isotopy)\n";
    return os.str();
}

std::string report_to_csv(const AnalysisReport& rep) {
    std::ostringstream os;
    os << "approx,lo,hi,source,classification,multiplicity_in_dH,verdict\n";
    for (const auto& cp : rep.critical_points) {
        os << cp.approx.to_decimal(17) << "," << cp.interval.lo << "," << cp.interval.hi << "," << to_string(cp.source)
           << "," << to_string(cp.classification) << "," << cp.multiplicity_in_dH << "," << to_string(cp.verdict)
           << "\n";
    }
    return os.str();
}

json scan_to_json(const JoinParams& base, const std::vector<ScanRow>& rows) {
    json r = json::array();
    for (const auto& row : rows) {
        json cls = json::array();
        for (auto c : row.classifications) cls.push_back(to_string(c));
        r.push_back({{"l2", row.l2}, {"csc_rays", row.csc_rays}, {"critical", row.critical}, {"classifications", cls}});
    }
    json t = params_json(base);
    t.erase("l2");
    return {{"template", t}, {"rows", r}, {"meta", {{"tool", "reebcone"}, {"version", kVersion}}}};
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "l2,csc_rays,critical,classifications\n";
    for (const auto& row : rows) {
        std::string cls;
        for (auto c : row.classifications) cls += (cls.empty() ? "" : ";") + to_string(c);
        os << row.l2 << "," << row.csc_rays << "," << row.critical << "," << csv_field(cls) << "\n";
    }
    return os.str();
}

std::string sample_csv(const FunctionalBundle& fb, const Rational& b_min, const Rational& b_max, int count) {
    std::ostringstream os;
    os << "b,H,dH,f_csc,S_num,V_num,verdict\n";
    const Rational step = (b_max - b_min) / Rational(count - 1);
    for (int i = 0; i < count; ++i) {
        const Rational b = i == count - 1 ? b_max : b_min + step * Rational(i);
        const Rational fc = fb.f_csc(b);
        os << b.to_decimal(17) << "," << fb.H(b).to_decimal(17) << "," << fb.dH(b).to_decimal(17) << ","
           << fc.to_decimal(17) << "," << fb.S_num(b).to_decimal(17) << "," << fb.V_num(b).to_decimal(17) << ","
           << to_string(fc.is_zero() ? Verdict::KSemistableCscS : Verdict::KUnstable) << "\n";
    }
    return os.str();
}

bool GoldenResult::all_passed() const {
    for (const auto& i : items) {
        if (!i.passed) return false;
    }
    return true;
}

}  // namespace reeb::cli
