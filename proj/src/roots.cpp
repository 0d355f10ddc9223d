#include "reeb/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace reeb {

int Bound::sign_of(const UniPoly& p) const {
    switch (kind_) {
        case Kind::Finite:
            return p.sign_at(value_);
        case Kind::PosInf:
            return p.leading().sign();
        case Kind::NegInf:
            return p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign();
    }
    return 0;
}

std::string Bound::to_string() const {
    switch (kind_) {
        case Kind::Finite:
            return value_.to_string();
        case Kind::PosInf:
            return "+inf";
        case Kind::NegInf:
            return "-inf";
    }
    return {};
}

bool operator<(const Bound& a, const Bound& b) {
    if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind());
    return a.finite() && a.value() < b.value();
}

SturmSequence::SturmSequence(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    chain_.push_back(square_free_part(p));
    if (chain_.front().degree() <= 0) return;
    chain_.push_back(chain_.front().derivative());
    while (true) {
        UniPoly r = poly_divrem(chain_[chain_.size() - 2], chain_.back()).remainder;
        if (r.is_zero()) break;
        chain_.push_back((-r).primitive());
    }
}

int SturmSequence::variations(const Bound& x) const {
    int changes = 0;
    int prev = 0;
    for (const auto& q : chain_) {
        const int s = x.sign_of(q);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int SturmSequence::count(const Bound& lo, const Bound& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("sturm count needs lo < hi");
    return variations(lo) - variations(hi);
}

int sturm_count(const UniPoly& p, const Bound& lo, const Bound& hi) { return SturmSequence(p).count(lo, hi); }

int descartes_positive_bound(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Descartes bound of the zero polynomial");
    int changes = 0;
    int prev = 0;
    for (const auto& c : p.coefficients()) {
        const int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int root_multiplicity(const UniPoly& p, const Rational& root) {
    if (p.is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
    const UniPoly factor = UniPoly::linear_factor(root);
    int k = 0;
    UniPoly q = p;
    while (q.degree() >= 1) {
        DivRem dr = poly_divrem(q, factor);
        if (!dr.remainder.is_zero()) break;
        q = std::move(dr.quotient);
        ++k;
    }
    return k;
}

int multiplicity_on(const UniPoly& p, const IsolatingInterval& iv) {
    if (iv.exact()) return root_multiplicity(p, iv.lo);
    int k = 0;
    UniPoly g = p;
    while (g.degree() >= 1 && sturm_count(g, iv.lo, iv.hi) - (g(iv.hi).is_zero() ? 1 : 0) > 0) {
        ++k;
        g = poly_gcd(g, g.derivative());
    }
    return k;
}

namespace {

// Cauchy bound: every root satisfies |x| < 1 + max |a_i / a_n|.
Rational root_bound(const UniPoly& p) {
    Rational m = 0;
    const Rational lead = p.leading().abs();
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, p.coeff(k).abs() / lead);
    return m + Rational(2);
}

struct Pending {
    Rational lo;
    Rational hi;
    bool lo_root;
    bool hi_root;
};

}  // namespace

std::vector<IsolatingInterval> isolate_positive_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
    UniPoly sqf = square_free_part(p);
    if (const int v = sqf.valuation(); v > 0) sqf = poly_divrem(sqf, UniPoly::monomial(1, v)).quotient;
    std::vector<IsolatingInterval> out;
    if (sqf.degree() <= 0) return out;
    sqf = sqf.primitive();
    const SturmSequence sturm(sqf);
    const Rational lead = sqf.leading().abs();

    auto count = [&](const Pending& w) { return sturm.count(w.lo, w.hi) - (w.hi_root ? 1 : 0); };

    std::vector<Pending> work{{Rational(0), root_bound(sqf), false, false}};
    std::vector<IsolatingInterval> open;
    while (!work.empty()) {
        Pending w = work.back();
        work.pop_back();
        const int c = count(w);
        if (c == 0) continue;
        if (c == 1 && !w.lo_root && !w.hi_root) {
            open.push_back({w.lo, w.hi, 1});
            continue;
        }
        const Rational mid = (w.lo + w.hi) / Rational(2);
        const bool mid_root = sqf(mid).is_zero();
        if (mid_root) out.push_back({mid, mid, 1});
        work.push_back({w.lo, mid, w.lo_root, mid_root});
        work.push_back({mid, w.hi, mid_root, w.hi_root});
    }

    // Any rational root r = u/q of the primitive integer polynomial has q | a_n,
    // so a_n * r is an integer: shrink each interval below width 1/|a_n| and
    // test the only possible candidate.
    const Rational target = Rational(1) / lead;
    for (IsolatingInterval iv : open) {
        const int s_lo = sqf.sign_at(iv.lo);
        bool hit = false;
        while (iv.width() >= target) {
            const Rational mid = iv.midpoint();
            const int s = sqf.sign_at(mid);
            if (s == 0) {
                iv = {mid, mid, 1};
                hit = true;
                break;
            }
            (s == s_lo ? iv.lo : iv.hi) = mid;
        }
        if (!hit) {
            const Rational k_lo = (iv.lo * lead).ceil_value();
            const Rational k_hi = (iv.hi * lead).floor_value();
            for (Rational k = k_lo; k <= k_hi; k += Rational(1)) {
                const Rational cand = k / lead;
                if (sqf(cand).is_zero()) {
                    iv = {cand, cand, 1};
                    break;
                }
            }
        }
        out.push_back(iv);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    for (auto& iv : out) iv.multiplicity = multiplicity_on(p, iv);
    return out;
}

IsolatingInterval refine_interval(const UniPoly& p, const IsolatingInterval& iv, const Rational& tol) {
    if (tol.sign() <= 0) throw std::invalid_argument("refinement tolerance must be positive");
    if (iv.exact()) {
        if (!p(iv.lo).is_zero()) throw std::invalid_argument("not isolating");
        return iv;
    }
    const UniPoly sqf = square_free_part(p);
    const int s_lo = sqf.sign_at(iv.lo);
    const int s_hi = sqf.sign_at(iv.hi);
    if (s_lo * s_hi >= 0) throw std::invalid_argument("not isolating");
    IsolatingInterval cur = iv;
    while (cur.width() > tol) {
        const Rational mid = cur.midpoint();
        const int s = sqf.sign_at(mid);
        if (s == 0) return {mid, mid, iv.multiplicity};
        (s == s_lo ? cur.lo : cur.hi) = mid;
    }
    return cur;
}

Rational refine_root(const UniPoly& p, const IsolatingInterval& iv, const Rational& tol) {
    return refine_interval(p, iv, tol).midpoint();
}

PositivityResult positive_on_open_interval(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("positivity check needs lo < hi");
    if (p.is_zero()) return {false, "zero polynomial"};
    const Rational mid = (lo + hi) / Rational(2);
    if (p.sign_at(mid) <= 0) return {false, "not positive at midpoint " + mid.to_string()};
    const SturmSequence sturm(p);
    const int interior = sturm.count(lo, hi) - (p(hi).is_zero() ? 1 : 0);
    if (interior > 0) return {false, std::to_string(interior) + " interior root(s)"};
    return {true, {}};
}

}  // namespace reeb
