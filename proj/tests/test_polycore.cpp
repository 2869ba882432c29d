#include "milnor/poly.hpp"

#include <doctest.h>

#include <random>

using namespace milnor;

namespace {
const std::vector<std::string> xy = {"x", "y"};
Polynomial P(const std::string& s) { return parse_polynomial(s, xy); }

Polynomial random_poly(std::mt19937& rng, int max_terms = 5, int max_exp = 4, int max_coef = 5)
{
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coef(-max_coef, max_coef);
    Polynomial p(xy);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        const Rational c(coef(rng));
        p.add_term({exp(rng), exp(rng)}, c);
    }
    return p;
}
} // namespace

TEST_CASE("parser: spec examples")
{
    auto p = P("x^3 + y^2");
    CHECK(p.term_count() == 2);
    CHECK(p.coeff({3, 0}) == 1);
    CHECK(p.coeff({0, 2}) == 1);

    CHECK(P("0").is_zero());
    auto q = P("(x+y)^2 - x^2 - 2*x*y");
    CHECK(q.term_count() == 1);
    CHECK(q.coeff({0, 2}) == 1);
}

TEST_CASE("parser: juxtaposition, rationals, exponent binding")
{
    CHECK(P("2xy").coeff({1, 1}) == 2);
    CHECK(P("2 x y").coeff({1, 1}) == 2);
    // '^' binds to the last variable of an identifier run
    CHECK(P("8xy^4").coeff({1, 4}) == 8);
    CHECK(P("49/50 x^2").coeff({2, 0}) == Rational(49, 50));
    CHECK_THROWS_AS(P("x/2"), parse_error); // '/' only continues a numeric literal
}

TEST_CASE("parser: multi-character variables split greedily")
{
    const std::vector<std::string> z3 = {"z1", "z2", "z3"};
    auto p = parse_polynomial("z1^2 + z1z2 + z2z3", z3);
    CHECK(p.coeff({2, 0, 0}) == 1);
    CHECK(p.coeff({1, 1, 0}) == 1);
    CHECK(p.coeff({0, 1, 1}) == 1);
}

TEST_CASE("parser: errors are position-annotated")
{
    CHECK_THROWS_AS(P("x +"), parse_error);
    CHECK_THROWS_AS(P("x ^ x"), parse_error);
    CHECK_THROWS_AS(P("w + y"), parse_error);    // unknown variable
    CHECK_THROWS_AS(P("(x+y"), parse_error);     // unbalanced
    CHECK_THROWS_AS(P("x^99999999999"), parse_error); // exponent overflow
    try {
        P("x + $");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("print/parse round-trip is the identity on canonical form")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = random_poly(rng);
        const std::string s = p.str();
        const Polynomial q = parse_polynomial(s, xy);
        CHECK(q == p);
        CHECK(q.str() == s);
    }
}

TEST_CASE("differentiate: spec examples")
{
    CHECK(differentiate(P("x^3+y^2"), "x") == P("3x^2"));
    CHECK(differentiate(P("x*y^2 + x^4 + y^4"), "y") == P("2xy + 4y^3"));
    CHECK(differentiate(P("y^2"), "x").is_zero());
    CHECK_THROWS_AS(differentiate(P("x"), "w"), precondition_error);
}

TEST_CASE("differentiate is linear and satisfies the Leibniz rule")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = random_poly(rng), q = random_poly(rng);
        const auto dp = differentiate(p, "x"), dq = differentiate(q, "x");
        CHECK(differentiate(p + q, "x") == dp + dq);
        CHECK(differentiate(p * q, "x") == dp * q + p * dq);
    }
}

TEST_CASE("arith: spec examples")
{
    CHECK(arith(P("x^3+y^2"), P("x^2+y^2"), ArithOp::mul) ==
          P("x^5 + x^3y^2 + x^2y^2 + y^4"));
    const auto p = P("x^2 - 3xy");
    CHECK(arith(p, p, ArithOp::sub).is_zero());
    CHECK(arith(arith(P("3x^2"), P("2y"), ArithOp::mul), arith(P("2y"), P("2x"), ArithOp::mul),
                ArithOp::sub) == P("6x^2y - 4xy"));
    const std::vector<std::string> other = {"u", "v"};
    CHECK_THROWS_AS(arith(P("x"), parse_polynomial("u", other), ArithOp::add),
                    precondition_error);
}

TEST_CASE("evaluate_complex: spec examples")
{
    using cx = std::complex<double>;
    CHECK(std::abs(evaluate_complex(P("x^2+y^2"), {cx(1, 0), cx(0, 1)})) < 1e-15);
    CHECK(std::abs(evaluate_complex(P("x^3+y^2"), {cx(0, 0), cx(0.5, 0)}) - cx(0.25, 0)) < 1e-15);
    CHECK(std::abs(evaluate_complex(P("7 + x y"), {cx(0, 0), cx(0, 0)}) - cx(7, 0)) < 1e-15);
}

TEST_CASE("evaluate agrees with exact term-wise evaluation")
{
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const Polynomial p = random_poly(rng);
        const std::complex<double> zx(u(rng), u(rng)), zy(u(rng), u(rng));
        std::complex<double> direct = 0;
        for (const auto& [ev, c] : p.terms())
            direct += to_double(c) * std::pow(zx, double(ev[0])) * std::pow(zy, double(ev[1]));
        const auto h = evaluate_complex(p, {zx, zy});
        CHECK(std::abs(h - direct) <= 1e-12 * (1.0 + std::abs(direct)));
    }
}
