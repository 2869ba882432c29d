#include "milnor/puiseux.hpp"

#include "milnor/newton.hpp"
#include "milnor/upoly.hpp"

#include <doctest.h>

#include <map>

using namespace milnor;

namespace {
const std::vector<std::string> xy = {"x", "y"};
Polynomial P(const std::string& s) { return parse_polynomial(s, xy); }

std::vector<const PuiseuxBranch*> regular_branches(const BranchesResult& r)
{
    std::vector<const PuiseuxBranch*> out;
    for (const auto& b : r.branches)
        if (b.kind == PuiseuxBranch::Kind::regular) out.push_back(&b);
    return out;
}
} // namespace

TEST_CASE("branches: cusp is exact")
{
    auto r = branches(P("y^2 - x^3"), 12);
    REQUIRE(r.branches.size() == 1);
    const auto& b = r.branches[0];
    CHECK(b.e == 2);
    CHECK(b.p == 2);
    CHECK(b.q == 3);
    CHECK(b.exact);
    CHECK(b.y.coefficient(3) == Coeff(Rational(1)));
    CHECK(b.verified_order >= kTruncInf);
    CHECK(verify_branch(P("y^2 - x^3"), b) >= kTruncInf);
}

TEST_CASE("branches: the Jacobian of the third example")
{
    const Polynomial J = P("-3x^2y^2 + 4y^5 + 4x^5 - 8x^4y - 8xy^4");
    auto r = branches(J, 12);
    auto regs = regular_branches(r);
    REQUIRE(regs.size() == 2);

    // the (2,3)-rooted branch: x = t^2, y = (2 sqrt3/3) t^3 - (4/3) t^4 + ...
    const PuiseuxBranch* b = nullptr;
    for (auto* cand : regs)
        if (cand->p == 2 && cand->q == 3) b = cand;
    REQUIRE(b != nullptr);
    CHECK(b->e == 2);
    const double a = 2.0 * std::sqrt(3.0) / 3.0;
    CHECK(std::abs(b->y.coefficient(3).approx() - std::complex<double>(a, 0)) < 1e-9);
    CHECK(std::abs(b->y.coefficient(4).approx() - std::complex<double>(-4.0 / 3.0, 0)) < 1e-9);
    CHECK(verify_branch(J, *b) >= 12);
}

TEST_CASE("branches: the quintic example j2 has 5 smooth branches")
{
    const Polynomial j2 = P("-10x^5 - 25x^3y^3 - 10y^5 + 12x^6 + 36x^4y^4 + 12y^6");
    auto r = branches(j2, 12);
    auto regs = regular_branches(r);
    REQUIRE(regs.size() == 5);

    // C1: y = -x + (49/50) x^2 + ... with exact rational coefficients
    const PuiseuxBranch* c1 = nullptr;
    for (auto* b : regs)
        if (b->alpha == Coeff(Rational(-1))) c1 = b;
    REQUIRE(c1 != nullptr);
    CHECK(c1->exact);
    CHECK(c1->e == 1);
    CHECK(c1->y.coefficient(2).exact());
    CHECK(c1->y.coefficient(2).exact_re() == Rational(49, 50));

    // C_{2a}: second coefficient equals -1/2 + (13/50)a - (13/50)a^2 + (1/2)a^3
    // for the quartic root a (independent hand formula)
    for (auto* b : regs) {
        if (b == c1) continue;
        const std::complex<double> aa = b->alpha.approx();
        // a is a primitive 10th root of unity: a^4 - a^3 + a^2 - a + 1 = 0
        std::complex<double> quartic = ((aa - 1.0) * aa + 1.0) * aa * aa - aa + 1.0;
        CHECK(std::abs(quartic) < 1e-10);
        const std::complex<double> expect =
            -0.5 + (13.0 / 50.0) * aa - (13.0 / 50.0) * aa * aa + 0.5 * aa * aa * aa;
        CHECK(std::abs(b->y.coefficient(2).approx() - expect) < 1e-10);
        CHECK(verify_branch(j2, *b) >= 12);
    }
}

TEST_CASE("verify_branch: negative control rejects a sign-flipped branch")
{
    const Polynomial j2 = P("-10x^5 - 25x^3y^3 - 10y^5 + 12x^6 + 36x^4y^4 + 12y^6");
    auto r = branches(j2, 12);
    const PuiseuxBranch* c1 = nullptr;
    for (auto* b : regular_branches(r))
        if (b->alpha == Coeff(Rational(-1))) c1 = b;
    REQUIRE(c1 != nullptr);

    PuiseuxBranch wrong = *c1;
    ComplexSeries y2(wrong.y.trunc());
    for (const auto& [k, c] : wrong.y.coefficients()) y2.set(k, k == 1 ? -c : c); // y = +x + ...
    wrong.y = y2;
    const auto cert = verify_branch(j2, wrong);
    CHECK(cert < 12);
    CHECK(cert <= 6); // fails essentially at the leading face
}

TEST_CASE("branches: truncated branch verifies beyond naive substitution depth")
{
    const Polynomial J = P("-3x^2y^2 + 4y^5 + 4x^5 - 8x^4y - 8xy^4");
    auto r = branches(J, 8);
    for (const auto& b : r.branches) {
        CHECK(verify_branch(J, b) >= 8);
        CHECK(verify_branch(J, b) == b.verified_order);
    }
}

TEST_CASE("branches: preconditions")
{
    CHECK_THROWS_AS(branches(P("1 + x"), 12), precondition_error);
    CHECK_THROWS_AS(branches(Polynomial::zero(xy), 12), precondition_error);
    CHECK_THROWS_AS(branches(P("y^2-x^3"), 3), precondition_error);
}

TEST_CASE("branches: completeness of leading data against edge factorizations")
{
    // on a corpus of germs: for every edge of Gamma(k) and every distinct
    // root beta of its edge polynomial, the branches rooted there satisfy
    // sum of ramifications e/p = multiplicity of beta
    const std::vector<std::string> corpus = {
        "y^2 - x^3",
        "y^3 - x^2",
        "y^2 - x^5",
        "y^5 - x^2",
        "y^3 - x^7",
        "x^2 + y^2",
        "x^2 - y^2",
        "y^4 - 2x^3y^2 + x^6 - x^7",
        "x^2 - 3xy + y^3",
        "y^2 - x^4 + x^7",
        "-10x^5 - 25x^3y^3 - 10y^5 + 12x^6 + 36x^4y^4 + 12y^6",
        "-3x^2y^2 + 4y^5 + 4x^5 - 8x^4y - 8xy^4",
        "y^3 - x^4",
        "y^2 - x^2 - x^3",
        "x^5 + x^2y^2 + y^6",
    };
    for (const auto& s : corpus) {
        CAPTURE(s);
        const Polynomial k = P(s);
        auto r = branches(k, 12);
        // multiset of (p, q, beta) with ramification weights from branches
        std::map<std::tuple<std::int64_t, std::int64_t, long long, long long>, std::int64_t> got;
        for (const auto& b : r.branches) {
            if (b.kind != PuiseuxBranch::Kind::regular) continue;
            // beta = alpha^p identifies the edge factor
            Coeff beta = Coeff(Rational(1));
            for (std::int64_t i = 0; i < b.p; ++i) beta = beta * b.alpha;
            const auto z = beta.approx();
            got[{b.p, b.q, std::llround(z.real() * 1e6), std::llround(z.imag() * 1e6)}] +=
                b.e / b.p;
        }
        // strip axis factors the same way branches() does
        Polynomial kt = k;
        if (kt.min_exponent(0) > 0) kt = kt.shift_down(0, kt.min_exponent(0));
        if (kt.min_exponent(1) > 0) kt = kt.shift_down(1, kt.min_exponent(1));
        std::map<std::tuple<std::int64_t, std::int64_t, long long, long long>, std::int64_t> want;
        if (!kt.has_constant_term()) {
            const auto nd = newton_boundary(kt);
            for (const auto& face : nd.faces) {
                const auto ff = face_function(kt, face.normal);
                CPoly E(ff.edge_polynomial.size());
                for (std::size_t i = 0; i < E.size(); ++i) E[i] = Coeff(ff.edge_polynomial[i]);
                for (const auto& rm : complex_roots(E)) {
                    const auto z = rm.root.approx();
                    want[{face.normal[0], face.normal[1], std::llround(z.real() * 1e6),
                          std::llround(z.imag() * 1e6)}] = rm.multiplicity;
                }
            }
        }
        CHECK(got == want);
    }
}

TEST_CASE("branches: axis branches are split out exactly")
{
    auto r = branches(P("6x^2y - 4xy"), 12);
    REQUIRE(r.branches.size() == 2);
    CHECK(r.branches[0].kind == PuiseuxBranch::Kind::axis_x);
    CHECK(r.branches[1].kind == PuiseuxBranch::Kind::axis_y);
    CHECK(r.branches[0].exact);
    CHECK(verify_branch(P("6x^2y - 4xy"), r.branches[0]) >= kTruncInf);

    auto r2 = branches(P("x^3y^2 - x^2y^4 + x^2y^2"), 12);
    // = x^2 y^2 (x - y^2 + 1): the extra factor is a unit at the origin
    REQUIRE(r2.branches.size() == 2);
    CHECK(regular_branches(r2).empty());
}

TEST_CASE("branches: repeated factors are reduced, branch set unchanged")
{
    const Polynomial k = P("y^2 - x^3");
    const Polynomial k2 = k * k;
    auto r = branches(k2, 12);
    CHECK(r.reduced);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].e == 2);
    CHECK(verify_branch(k2, r.branches[0]) >= kTruncInf);
}

TEST_CASE("branches: determinism of the branch list")
{
    const Polynomial j2 = P("-10x^5 - 25x^3y^3 - 10y^5 + 12x^6 + 36x^4y^4 + 12y^6");
    auto r1 = branches(j2, 12);
    auto r2 = branches(j2, 12);
    REQUIRE(r1.branches.size() == r2.branches.size());
    for (std::size_t i = 0; i < r1.branches.size(); ++i) {
        CHECK(r1.branches[i].rooted_at == r2.branches[i].rooted_at);
        CHECK(r1.branches[i].y.coefficients().size() == r2.branches[i].y.coefficients().size());
        for (const auto& [k, c] : r1.branches[i].y.coefficients())
            CHECK(c == r2.branches[i].y.coefficient(k));
    }
}

TEST_CASE("branches: exact fast path stays rational")
{
    // node with two rational tangents: y^2 - x^2 - x^3
    auto r = branches(P("y^2 - x^2 - x^3"), 12);
    auto regs = regular_branches(r);
    REQUIRE(regs.size() == 2);
    for (auto* b : regs) {
        CHECK(b->exact);
        for (const auto& [k, c] : b->y.coefficients()) CHECK(c.exact());
    }
}
