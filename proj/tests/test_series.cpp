#include "milnor/series.hpp"
#include "milnor/upoly.hpp"

#include <doctest.h>

#include <random>

using namespace milnor;

namespace {
const std::vector<std::string> xy = {"x", "y"};
Polynomial P(const std::string& s) { return parse_polynomial(s, xy); }
} // namespace

TEST_CASE("compose_series: spec examples")
{
    // f = x^3 + y^2 along (0, t) -> t^2
    {
        auto r = compose_series(P("x^3+y^2"), {ComplexSeries::zero(), ComplexSeries::t_power(1)},
                                kTruncInf);
        REQUIRE(r.order().has_value());
        CHECK(*r.order() == 2);
        CHECK(r.coefficient(2) == Coeff(Rational(1)));
        CHECK(r.is_exact_polynomial());
    }
    // f = xy^2 + x^4 + y^4 along x = t^2, y = (2 sqrt3/3) t^3 - (4/3) t^4:
    // leading term (4/3 + 1) t^8
    {
        const double a = 2.0 * std::sqrt(3.0) / 3.0;
        ComplexSeries y(5); // coefficients known strictly below t^5
        y.set(3, Coeff(a));
        y.set(4, Coeff(Rational(-4, 3)));
        auto r = compose_series(P("xy^2 + x^4 + y^4"), {ComplexSeries::t_power(2), y}, 16);
        REQUIRE(r.order().has_value());
        CHECK(*r.order() == 8);
        CHECK(r.coefficient(8).abs() == doctest::Approx(4.0 / 3.0 + 1.0).epsilon(1e-12));
    }
    // constant 1 along anything -> 1
    {
        ComplexSeries y(7);
        y.set(1, Coeff(Rational(5)));
        auto r = compose_series(P("1"), {ComplexSeries::t_power(3), y}, 10);
        CHECK(*r.order() == 0);
        CHECK(r.coefficient(0) == Coeff(Rational(1)));
    }
    CHECK_THROWS_AS(compose_series(Polynomial::zero(xy),
                                   {ComplexSeries::t_power(1), ComplexSeries::t_power(1)}, 8),
                    precondition_error);
}

TEST_CASE("compose_series is multiplicative up to shared truncation")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial p(xy), q(xy);
        for (int i = 0; i < 3; ++i) {
            p.add_term({coef(rng) & 3, coef(rng) & 3}, Rational(coef(rng)));
            q.add_term({coef(rng) & 3, coef(rng) & 3}, Rational(coef(rng)));
        }
        if (p.is_zero() || q.is_zero()) continue;
        ComplexSeries yser(9);
        yser.set(1, Coeff(Rational(coef(rng))));
        yser.set(2, Coeff(Rational(coef(rng))));
        const std::vector<ComplexSeries> b = {ComplexSeries::t_power(2), yser};
        auto lhs = compose_series(p * q, b, 24);
        auto rhs = compose_series(p, b, 24) * compose_series(q, b, 24);
        const std::int64_t T = std::min(lhs.trunc(), rhs.trunc());
        for (std::int64_t k = -2; k < T; ++k)
            CHECK(lhs.coefficient(k) == rhs.coefficient(k));
    }
}

TEST_CASE("series_ratio: spec examples")
{
    // t^2 / t^2 = 1
    {
        auto r = series_ratio(ComplexSeries::t_power(2), ComplexSeries::t_power(2), 8);
        CHECK(*r.order() == 0);
        CHECK(r.coefficient(0) == Coeff(Rational(1)));
    }
    // (1+t)/(1-t) = 1 + 2t + 2t^2 + ...
    {
        ComplexSeries num = ComplexSeries::one();
        num.set(1, Coeff(Rational(1)));
        ComplexSeries den = ComplexSeries::one();
        den.set(1, Coeff(Rational(-1)));
        auto r = series_ratio(num, den, 6);
        CHECK(r.coefficient(0) == Coeff(Rational(1)));
        for (int k = 1; k < 5; ++k) CHECK(r.coefficient(k) == Coeff(Rational(2)));
    }
    // (8t^7 + ...) / (7t^7 + ...) -> 8/7 + O(t), Laurent order 0
    {
        ComplexSeries num(12), den(12);
        num.set(7, Coeff(Rational(8)));
        num.set(8, Coeff(Rational(3)));
        den.set(7, Coeff(Rational(7)));
        den.set(9, Coeff(Rational(-2)));
        auto r = series_ratio(num, den, 10);
        CHECK(*r.order() == 0);
        CHECK(r.coefficient(0) == Coeff(Rational(8, 7)));
    }
    CHECK_THROWS_AS(series_ratio(ComplexSeries::one(), ComplexSeries::zero(8), 8),
                    precondition_error);
}

TEST_CASE("series truncation propagates through arithmetic")
{
    ComplexSeries a(5); // known strictly below 5
    a.set(2, Coeff(Rational(1)));
    ComplexSeries b(7);
    b.set(1, Coeff(Rational(1)));
    const auto sum = a + b;
    CHECK(sum.trunc() == 5);
    const auto prod = a * b;
    CHECK(prod.trunc() == std::min<std::int64_t>(5 + 1, 7 + 2)); // 6
    // Laurent inverse: trunc(b^-1) = trunc - 2*ord
    ComplexSeries c(5);
    c.set(2, Coeff(Rational(1)));
    c.set(3, Coeff(Rational(1)));
    const auto inv = c.inverse(50);
    CHECK(inv.trunc() == 5 - 4);
    CHECK(*inv.order() == -2);
}

TEST_CASE("complex_roots: spec examples")
{
    // s^2 + 1 -> i, -i (snapped exact)
    {
        auto roots = complex_roots(UPoly{Rational(1), Rational(0), Rational(1)});
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].root == Coeff(Rational(0), Rational(-1)));
        CHECK(roots[1].root == Coeff(Rational(0), Rational(1)));
        CHECK(roots[0].multiplicity == 1);
    }
    // s^2 - 2s + 1 -> {1: 2}
    {
        auto roots = complex_roots(UPoly{Rational(1), Rational(-2), Rational(1)});
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].root == Coeff(Rational(1)));
        CHECK(roots[0].multiplicity == 2);
    }
    // a^4 - a^3 + a^2 - a + 1: four simple primitive 10th roots of unity
    {
        auto roots = complex_roots(
            UPoly{Rational(1), Rational(-1), Rational(1), Rational(-1), Rational(1)});
        REQUIRE(roots.size() == 4);
        for (const auto& r : roots) {
            CHECK(r.multiplicity == 1);
            CHECK(std::abs(r.root.abs() - 1.0) < 1e-12);
            // verify a^5 = -1
            std::complex<double> a = r.root.approx(), p = 1;
            for (int i = 0; i < 5; ++i) p *= a;
            CHECK(std::abs(p + 1.0) < 1e-10);
        }
    }
    CHECK_THROWS_AS(complex_roots(UPoly{Rational(3)}), precondition_error);
}

TEST_CASE("complex_roots: multiplicity sum and residual bounds hold")
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int iter = 0; iter < 30; ++iter) {
        UPoly p;
        const int deg = 2 + iter % 7;
        for (int i = 0; i <= deg; ++i) p.push_back(Rational(coef(rng)));
        p = up_trim(std::move(p));
        if (up_degree(p) < 1) continue;
        const auto roots = complex_roots(p, 1e-12);
        std::int64_t total = 0;
        double maxc = 0;
        for (const auto& c : p) maxc = std::max(maxc, std::abs(to_double(c)));
        for (const auto& r : roots) {
            total += r.multiplicity;
            std::complex<double> v = 0;
            for (auto it = p.rbegin(); it != p.rend(); ++it)
                v = v * r.root.approx() + to_double(*it);
            CHECK(std::abs(v) < 1e-9 * (1.0 + maxc));
        }
        CHECK(total == up_degree(p));
    }
}

TEST_CASE("squarefree_part: spec examples")
{
    // s^3 -> (s, 1)
    {
        auto [sf, cnt] = up_squarefree_part(UPoly{Rational(0), Rational(0), Rational(0), Rational(1)});
        CHECK(cnt == 1);
        CHECK(up_degree(sf) == 1);
    }
    // (s-1)^2 (s+2) = s^3 - 3s + 2 -> squarefree part s^2 + s - 2, two roots
    {
        auto [sf, cnt] = up_squarefree_part(UPoly{Rational(2), Rational(-3), Rational(0), Rational(1)});
        CHECK(cnt == 2);
        // monic normalization of s^2 + s - 2
        UPoly expect{Rational(-2), Rational(1), Rational(1)};
        const Rational lead = sf.back();
        for (std::size_t i = 0; i < sf.size(); ++i) CHECK(sf[i] / lead == expect[i] / expect.back());
    }
    // s^2 + 1 already squarefree
    {
        auto [sf, cnt] = up_squarefree_part(UPoly{Rational(1), Rational(0), Rational(1)});
        CHECK(cnt == 2);
    }
}

TEST_CASE("squarefree_part * gcd(p, p') recovers p up to a rational scalar")
{
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
        // build p as a product of small factors with repetition
        UPoly p{Rational(1)};
        const int nf = 1 + iter % 3;
        for (int i = 0; i < nf; ++i) {
            UPoly f{Rational(coef(rng)), Rational(1)};
            const int e = 1 + (iter + i) % 3;
            for (int k = 0; k < e; ++k) p = up_mul(p, f);
        }
        auto [sf, cnt] = up_squarefree_part(p);
        const UPoly g = up_gcd(p, up_derivative(p));
        const UPoly prod = up_mul(sf, g);
        REQUIRE(prod.size() == p.size());
        const Rational scale = p.back() / prod.back();
        for (std::size_t i = 0; i < p.size(); ++i) CHECK(prod[i] * scale == p[i]);
    }
}
