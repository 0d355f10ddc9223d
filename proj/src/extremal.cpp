#include "reeb/extremal.hpp"

#include <array>
#include <utility>

#include "reeb/error.hpp"
#include "reeb/roots.hpp"

namespace reeb {

namespace {

using Row = std::array<Rational, 5>;

// Gauss-Jordan on an augmented 4x5 system; nullopt when singular.
std::optional<std::array<Rational, 4>> solve4(std::array<Row, 4> m) {
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        while (pivot < 4 && m[pivot][col].is_zero()) ++pivot;
        if (pivot == 4) return std::nullopt;
        std::swap(m[col], m[pivot]);
        const Rational inv = Rational(1) / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = 0; c < 5; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return std::array<Rational, 4>{m[0][4], m[1][4], m[2][4], m[3][4]};
}

UniPoly affine_base(const Rational& r) { return UniPoly({Rational(1), r}); }

}  // namespace

ExtremalSolution extremal_solution(const JoinParams& params, const RayId& ray) {
    require_valid(params);
    const QuotientData q = quotient_data(params, ray);
    if (q.regular) throw DomainError("extremal construction undefined at b = w2/w1");

    const int d = params.dN;
    const Rational r = q.r;
    const Rational s_N = params.A / Rational(q.n_deg);
    const UniPoly p = affine_base(r).pow(static_cast<unsigned>(d));
    const UniPoly z = UniPoly::monomial(1, 1);

    // F'' = K - alpha P - beta zP, so F = K2 - alpha P2 - beta ZP2 + c1 z + c2.
    const UniPoly K = Rational(2 * d) * s_N * r * affine_base(r).pow(static_cast<unsigned>(d - 1));
    const UniPoly K2 = K.antiderivative().antiderivative();
    const UniPoly P2 = p.antiderivative().antiderivative();
    const UniPoly ZP2 = (z * p).antiderivative().antiderivative();
    const UniPoly dK2 = K2.derivative(), dP2 = P2.derivative(), dZP2 = ZP2.derivative();

    const Rational one(1), neg(-1);
    const Rational slope_lo = Rational(2) * (one - r).pow(static_cast<unsigned>(d)) / Rational(q.m2);
    const Rational slope_hi = Rational(-2) * (one + r).pow(static_cast<unsigned>(d)) / Rational(q.m1);

    // unknowns (alpha, beta, c1, c2)
    std::array<Row, 4> sys{{
        {-P2(one), -ZP2(one), one, one, -K2(one)},
        {-P2(neg), -ZP2(neg), neg, one, -K2(neg)},
        {-dP2(neg), -dZP2(neg), one, Rational(0), slope_lo - dK2(neg)},
        {-dP2(one), -dZP2(one), one, Rational(0), slope_hi - dK2(one)},
    }};
    const auto x = solve4(sys);
    if (!x) throw InconsistencyError("degenerate endpoint system for ray " + ray.to_string());
    const auto& [alpha, beta, c1, c2] = *x;

    ExtremalSolution sol{ray, q, s_N, alpha, beta,
                         K2 - alpha * P2 - beta * ZP2 + UniPoly({c2, c1}), false};
    sol.admissible = is_admissible(sol);
    return sol;
}

bool is_admissible(const ExtremalSolution& sol) {
    return positive_on_open_interval(sol.F, Rational(-1), Rational(1)).positive;
}

UniPoly ode_residual(const JoinParams& params, const ExtremalSolution& sol) {
    const int d = params.dN;
    const Rational& r = sol.quotient.r;
    return sol.F.derivative().derivative() +
           UniPoly({sol.alpha, sol.beta}) * affine_base(r).pow(static_cast<unsigned>(d)) -
           Rational(2 * d) * sol.s_N * r * affine_base(r).pow(static_cast<unsigned>(d - 1));
}

bool admissible_at(const JoinParams& params, const Rational& b) {
    return extremal_solution(params, RayId::from_slope(b)).admissible;
}

AdmissibilityWindow admissibility_boundary(const JoinParams& params, const Rational& b_lo, const Rational& b_hi,
                                           const Rational& tol, int probes) {
    if (b_lo.sign() <= 0 || !(b_lo < b_hi)) throw DomainError("admissibility scan needs 0 < b_lo < b_hi");
    if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
    if (probes < 2) throw DomainError("at least two probes required");
    const Rational regular(params.w2, params.w1);
    const Rational step = (b_hi - b_lo) / Rational(probes - 1);

    // The regular slope has no extremal problem; step around it.
    auto usable = [&](Rational b) {
        if (b == regular) b += step / Rational(1000);
        return b;
    };
    std::vector<Rational> grid;
    std::vector<bool> adm;
    for (int i = 0; i < probes; ++i) {
        const Rational b = usable(b_lo + step * Rational(i));
        grid.push_back(b);
        adm.push_back(admissible_at(params, b));
    }

    auto bisect = [&](Rational lo, Rational hi, bool lo_state) {
        while (hi - lo > tol) {
            const Rational mid = usable((lo + hi) / Rational(2));
            if (!(lo < mid && mid < hi)) break;
            (admissible_at(params, mid) == lo_state ? lo : hi) = mid;
        }
        return Transition{lo, hi};
    };

    AdmissibilityWindow out;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!adm[i] && adm[i + 1]) {
            out.lower = bisect(grid[i], grid[i + 1], false);
            break;
        }
    }
    for (std::size_t i = grid.size() - 1; i > 0; --i) {
        if (adm[i - 1] && !adm[i]) {
            out.upper = bisect(grid[i - 1], grid[i], true);
            break;
        }
    }
    if (!out.lower && !out.upper) throw DomainError("no admissibility transition found");
    return out;
}

}  // namespace reeb
