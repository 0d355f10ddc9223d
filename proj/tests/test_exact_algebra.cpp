#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "reeb/error.hpp"
#include "reeb/rational_fn.hpp"
#include "reeb/roots.hpp"
#include "support.hpp"

using namespace reeb;
using reeb::testing::ints;
using reeb::testing::q;
using reeb::testing::var;

namespace {

// Product of (x - r)^k over the given roots, times an optional factor with
// no real roots.
UniPoly from_roots(const std::vector<std::pair<Rational, int>>& roots, const UniPoly& extra = ints({1})) {
    UniPoly p = extra;
    for (const auto& [r, k] : roots) p *= UniPoly::linear_factor(r).pow(static_cast<unsigned>(k));
    return p;
}

Rational random_root(std::mt19937_64& rng, long lo, long hi) {
    const long den = std::uniform_int_distribution<long>(1, 9)(rng);
    return Rational(BigInt(std::uniform_int_distribution<long>(lo * den, hi * den)(rng)), BigInt(den));
}

}  // namespace

TEST_CASE("polynomial basics") {
    const UniPoly p = ints({4, 58, 87, 9});
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "9*b^3 + 87*b^2 + 58*b + 4");
    CHECK(UniPoly().degree() == -1);
    CHECK(ints({0, 0, 3}).valuation() == 2);
    CHECK(ints({1, 2, 0, 0}).degree() == 1);
    CHECK(p(q(1, 3)) == q(4) + q(58, 3) + q(87, 9) + q(9, 27));
    CHECK(p.derivative() == ints({58, 174, 27}));
    CHECK(p.derivative().antiderivative() == p - ints({4}));
    CHECK((ints({3, 6}) * q(1, 2)).primitive() == ints({1, 2}));
    CHECK((ints({-3, -6})).primitive() == ints({-1, -2}));
}

TEST_CASE("divrem on known quotients") {
    SUBCASE("exact division by a cubic factor") {
        const UniPoly cube = ints({-2, 3}).pow(3);
        const UniPoly expected = ints({-8, -28, 30, 18});
        const DivRem r = poly_divrem(-(expected * cube), cube);
        CHECK(r.quotient == -expected);
        CHECK(r.remainder.is_zero());
    }
    SUBCASE("non-trivial remainder") {
        const DivRem r = poly_divrem(ints({1, 0, 0, 1}), ints({1, 1, 1}));
        CHECK(r.quotient == ints({-1, 1}));
        CHECK(r.remainder == ints({2}));
    }
    SUBCASE("zero divisor") { CHECK_THROWS_AS(poly_divrem(ints({1, 1}), UniPoly()), std::invalid_argument); }
}

TEST_CASE("divrem reconstructs the dividend") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const UniPoly p = testing::random_poly(rng, 9, 30);
        UniPoly d = testing::random_poly(rng, 5, 30);
        if (d.is_zero()) continue;
        const DivRem r = poly_divrem(p, d);
        CAPTURE(p.to_string());
        CAPTURE(d.to_string());
        CHECK(r.quotient * d + r.remainder == p);
        CHECK(r.remainder.degree() < d.degree());
    }
}

TEST_CASE("gcd and square-free part") {
    const UniPoly a = from_roots({{q(1), 2}, {q(-3, 2), 1}});
    const UniPoly b = from_roots({{q(1), 1}, {q(5), 1}});
    CHECK(poly_gcd(a, b) == UniPoly::linear_factor(q(1)));
    CHECK(square_free_part(a) == from_roots({{q(1), 1}, {q(-3, 2), 1}}));
    CHECK(poly_gcd(UniPoly(), UniPoly()).is_zero());
}

TEST_CASE("root_multiplicity") {
    const UniPoly p = from_roots({{q(2, 3), 5}, {q(1), 1}}, ints({1, 3, 1}));
    CHECK(root_multiplicity(p, q(2, 3)) == 5);
    CHECK(root_multiplicity(p, q(1)) == 1);
    CHECK(root_multiplicity(p, q(3)) == 0);
}

TEST_CASE("Sturm counts on polynomials with known roots") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<std::pair<Rational, int>> roots;
        const int n = std::uniform_int_distribution<int>(0, 5)(rng);
        for (int i = 0; i < n; ++i) {
            const Rational r = random_root(rng, -6, 6);
            if (std::any_of(roots.begin(), roots.end(), [&](const auto& e) { return e.first == r; })) continue;
            roots.emplace_back(r, std::uniform_int_distribution<int>(1, 3)(rng));
        }
        // x^2 + 1 contributes no real roots.
        const UniPoly p = from_roots(roots, trial % 2 ? ints({1, 0, 1}) : ints({-2}));
        const Rational lo = random_root(rng, -7, 3);
        const Rational hi = lo + random_root(rng, 1, 8);
        const auto inside = std::count_if(roots.begin(), roots.end(), [&](const auto& e) { return lo < e.first && e.first <= hi; });
        const auto positive = std::count_if(roots.begin(), roots.end(), [](const auto& e) { return e.first.sign() > 0; });
        CAPTURE(p.to_string());
        CHECK(sturm_count(p, lo, hi) == inside);
        CHECK(sturm_count(p, Bound::neg_inf(), Bound::pos_inf()) == static_cast<int>(roots.size()));
        CHECK(sturm_count(p, 0, Bound::pos_inf()) == positive);
        CHECK(descartes_positive_bound(p) >= positive);
    }
    CHECK_THROWS(sturm_count(ints({1, 1}), 1, 0));
}

TEST_CASE("Descartes bound is sharp on simple cases") {
    CHECK(descartes_positive_bound(ints({-1, 0, 1})) == 1);
    CHECK(descartes_positive_bound(ints({1, 2, 3})) == 0);
    CHECK(descartes_positive_bound(ints({2, -3, 1})) == 2);
    CHECK(descartes_positive_bound(ints({1, 0, 0, -1, 0, 1})) == 2);
}

TEST_CASE("isolation finds every positive root with its multiplicity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<std::pair<Rational, int>> roots;
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        for (int i = 0; i < n; ++i) {
            const Rational r = random_root(rng, -4, 12);
            if (std::any_of(roots.begin(), roots.end(), [&](const auto& e) { return e.first == r; })) continue;
            roots.emplace_back(r, std::uniform_int_distribution<int>(1, 4)(rng));
        }
        const UniPoly p = from_roots(roots, trial % 3 == 0 ? ints({-2, 0, 1}) : ints({3}));
        const auto ivs = isolate_positive_roots(p);
        std::vector<std::pair<Rational, int>> expected;
        for (const auto& e : roots)
            if (e.first.sign() > 0) expected.push_back(e);
        std::sort(expected.begin(), expected.end());
        std::size_t extra_irrational = trial % 3 == 0 ? 1 : 0;  // sqrt(2)
        CAPTURE(p.to_string());
        REQUIRE(ivs.size() == expected.size() + extra_irrational);
        for (std::size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi < ivs[i + 1].lo);
        for (const auto& [r, k] : expected) {
            auto it = std::find_if(ivs.begin(), ivs.end(), [&](const IsolatingInterval& iv) { return iv.contains(r); });
            REQUIRE(it != ivs.end());
            CHECK(it->exact());
            CHECK(it->lo == r);
            CHECK(it->multiplicity == k);
        }
    }
}

TEST_CASE("isolation ignores the root at zero") {
    const auto ivs = isolate_positive_roots(from_roots({{q(0), 3}, {q(1, 2), 1}}));
    REQUIRE(ivs.size() == 1);
    CHECK(ivs[0].lo == q(1, 2));
    CHECK(isolate_positive_roots(ints({1, 1})).empty());
}

TEST_CASE("refinement brackets irrational roots") {
    const UniPoly p = ints({-2, 0, 1});
    const auto ivs = isolate_positive_roots(p);
    REQUIRE(ivs.size() == 1);
    const Rational tol(BigInt(1), BigInt("1000000000000"));
    const IsolatingInterval fine = refine_interval(p, ivs[0], tol);
    CHECK(fine.width() <= tol);
    CHECK(fine.lo * fine.lo <= q(2));
    CHECK(fine.hi * fine.hi >= q(2));
    CHECK(refine_root(p, ivs[0], tol).to_double() == doctest::Approx(1.4142135623730951).epsilon(1e-12));
    CHECK_THROWS_AS(refine_interval(p, IsolatingInterval{q(2), q(3), 1}, tol), std::invalid_argument);
}

TEST_CASE("refinement is monotone in the tolerance") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const UniPoly p = testing::random_poly(rng, 7, 20);
        for (const IsolatingInterval& iv : isolate_positive_roots(p)) {
            IsolatingInterval prev = iv;
            for (long k : {10L, 1000L, 100000L, 10000000L}) {
                const IsolatingInterval next = refine_interval(p, iv, q(1, k));
                CHECK(next.width() <= q(1, k));
                CHECK(prev.lo <= next.lo);
                CHECK(next.hi <= prev.hi);
                CHECK(sturm_count(p, next.lo - q(1, 1000000000), next.hi) >= 1);
                prev = next;
            }
        }
    }
}

TEST_CASE("positivity on an open interval") {
    CHECK(positive_on_open_interval(ints({1, 0, -1}), q(-1), q(1)));
    CHECK_FALSE(positive_on_open_interval(ints({0, 1}), q(-1), q(1)));
    CHECK_FALSE(positive_on_open_interval(ints({0, 0, 1}), q(-1), q(1)));  // touches zero inside
    CHECK(positive_on_open_interval(ints({0, 0, 1}), q(0), q(1)));
    CHECK_FALSE(positive_on_open_interval(UniPoly(), q(0), q(1)));
    const auto r = positive_on_open_interval(ints({-1}), q(0), q(1));
    CHECK_FALSE(r.positive);
    CHECK_FALSE(r.diagnostic.empty());
}

TEST_CASE("positivity agrees with dense rational sampling") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const UniPoly p = testing::random_poly(rng, 6, 9) + ints({std::uniform_int_distribution<long>(0, 40)(rng)});
        bool sampled = true;
        for (int i = 1; i < 1000 && sampled; ++i)
            if (p(q(2 * i - 1000, 1000)).sign() <= 0) sampled = false;
        const bool exact = positive_on_open_interval(p, q(-1), q(1)).positive;
        CAPTURE(p.to_string());
        if (exact) CHECK(sampled);
        if (!exact && sampled) {
            // Only possible for a dip narrower than the grid: it must lie strictly inside.
            CHECK(sturm_count(p, q(-1), q(999, 1000)) > 0);
        } else {
            CHECK(exact == sampled);
        }
        ++checked;
    }
    CHECK(checked == 400);
}

TEST_CASE("rational functions") {
    const RationalFn f(ints({0, 2}) * ints({1, 1}), ints({0, 4}));
    CHECK(f.num() == ints({1, 1}) * q(1, 2));
    CHECK(f.den() == ints({1}));
    const RationalFn g(ints({1}), ints({0, 0, 3}));
    CHECK(g(q(1)) == q(1, 3));
    CHECK_THROWS_AS(g(q(0)), DomainError);
    CHECK(g.derivative()(q(1)) == q(-2, 3));
    CHECK(g.valuation_at_zero() == -2);
    CHECK(g.leading_at_zero() == q(1, 3));
    CHECK(g.degree_at_infinity() == -2);
    CHECK(same_function(ints({2}), ints({0, 2}), ints({1}), ints({0, 1})));
}
