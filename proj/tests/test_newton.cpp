#include "milnor/newton.hpp"

#include "milnor/polytope_nd.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace milnor;

namespace {
const std::vector<std::string> xy = {"x", "y"};
Polynomial P(const std::string& s) { return parse_polynomial(s, xy); }

/// Brute-force hull oracle: a support point is a boundary vertex iff some
/// strictly positive weight in a small search box attains its minimum
/// uniquely there. Valid for supports with coordinates <= 8.
std::set<LatticePoint> oracle_vertices(const std::vector<LatticePoint>& support)
{
    std::set<LatticePoint> verts;
    for (int p = 1; p <= 17; ++p) {
        for (int q = 1; q <= 17; ++q) {
            std::int64_t best = INT64_MAX;
            int count = 0;
            LatticePoint arg{};
            for (const auto& pt : support) {
                const std::int64_t v = p * pt[0] + q * pt[1];
                if (v < best) {
                    best = v;
                    count = 1;
                    arg = pt;
                } else if (v == best) {
                    ++count;
                }
            }
            if (count == 1) verts.insert(arg);
        }
    }
    return verts;
}
} // namespace

TEST_CASE("newton_boundary: spec examples")
{
    {
        auto nd = newton_boundary(P("x^3+y^2"));
        REQUIRE(nd.faces.size() == 1);
        CHECK(nd.faces[0].normal == WeightVector({2, 3}));
        CHECK(nd.faces[0].d == 6);
        CHECK(*nd.intercepts[0] == 3);
        CHECK(*nd.intercepts[1] == 2);
        CHECK(nd.boundary_vertices.size() == 2);
        CHECK(nd.convenient);
    }
    {
        auto nd = newton_boundary(P("x^5+x^2y^2+y^6"));
        REQUIRE(nd.faces.size() == 2);
        CHECK(nd.faces[0].normal == WeightVector({2, 3})); // increasing slope p/q
        CHECK(nd.faces[0].d == 10);
        CHECK(nd.faces[1].normal == WeightVector({2, 1}));
        CHECK(nd.faces[1].d == 6);
        CHECK(*nd.intercepts[0] == 5);
        CHECK(*nd.intercepts[1] == 6);
    }
    {
        auto nd = newton_boundary(P("x^2y^3"));
        CHECK(!nd.convenient);
        CHECK(!nd.intercepts[0]);
        CHECK(!nd.intercepts[1]);
    }
    CHECK_THROWS_AS(newton_boundary(P("1 + x")), precondition_error);
    CHECK_THROWS_AS(newton_boundary(Polynomial::zero(xy)), precondition_error);
}

TEST_CASE("newton_boundary vertices match the brute-force hull oracle")
{
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> e(0, 8);
    for (int iter = 0; iter < 120; ++iter) {
        std::vector<LatticePoint> support;
        const int n = 1 + iter % 7;
        for (int i = 0; i < n; ++i) support.push_back({e(rng), e(rng)});
        auto poly = newton_polygon(support);
        auto oracle = oracle_vertices(support);
        std::set<LatticePoint> got(poly.vertices.begin(), poly.vertices.end());
        CHECK(got == oracle);
    }
}

TEST_CASE("weighted_degree: spec examples")
{
    CHECK(weighted_degree(WeightVector({1, 1}), P("x^3+y^2")) == 2);
    const std::vector<std::string> z3 = {"z1", "z2", "z3"};
    CHECK(weighted_degree(WeightVector({1, 1, 1}), parse_polynomial("z1+z2+z3", z3)) == 1);
    CHECK(weighted_degree(WeightVector({2, 3}), P("x^5+x^2y^2+y^6")) == 10);
    CHECK_THROWS_AS(weighted_degree(WeightVector({1, 1}), Polynomial::zero(xy)),
                    precondition_error);
}

TEST_CASE("face_function: spec examples")
{
    {
        auto ff = face_function(P("x^5+x^2y^2+y^6"), WeightVector({2, 3}));
        CHECK(ff.f_P == P("x^5+x^2y^2"));
        CHECK(ff.offset_x == 2);
        CHECK(ff.offset_y == 0);
        REQUIRE(up_degree(ff.edge_polynomial) == 1); // E(s) = 1 + s
        CHECK(ff.edge_polynomial[0] == 1);
        CHECK(ff.edge_polynomial[1] == 1);
        CHECK(ff.distinct_roots == 1);
    }
    {
        auto ff = face_function(P("x^2+y^2"), WeightVector({1, 1}));
        CHECK(up_degree(ff.edge_polynomial) == 2); // 1 + s^2
        CHECK(ff.distinct_roots == 2);
    }
    {
        auto ff = face_function(P("x^3+y^2"), WeightVector({1, 1}));
        CHECK(ff.f_P == P("y^2")); // vertex face
        CHECK(ff.distinct_roots == 0);
    }
}

TEST_CASE("Euler identity on face functions")
{
    // p x d(f_P)/dx + q y d(f_P)/dy = d * f_P, exactly
    for (const char* s : {"x^3+y^2", "x^5+x^2y^2+y^6", "x^2+xy+y^2", "x^4+x^2y^3+xy^5+y^7"}) {
        const Polynomial f = P(s);
        const auto nd = newton_boundary(f);
        for (const auto& face : nd.faces) {
            const auto ff = face_function(f, face.normal);
            const Polynomial X = P("x"), Y = P("y");
            const Polynomial lhs = X * differentiate(ff.f_P, "x").scaled(Rational(face.normal[0])) +
                                   Y * differentiate(ff.f_P, "y").scaled(Rational(face.normal[1]));
            CHECK(lhs == ff.f_P.scaled(Rational(ff.d)));
        }
    }
}

TEST_CASE("multiplicity_condition: spec examples")
{
    {
        auto v = multiplicity_condition(P("x^3+y^2"), P("x^2+y^2"));
        CHECK(!v.satisfied);
        REQUIRE(v.witness.has_value());
        CHECK(*v.witness == WeightVector({1, 1}));
    }
    {
        auto v = multiplicity_condition(P("x^3-y^2"), P("x^2-y^3"));
        CHECK(!v.satisfied);
        CHECK(*v.witness == WeightVector({1, 1}));
    }
    {
        auto v = multiplicity_condition(P("x^2+y^2"), P("x^5+x^2y^3+y^7"));
        CHECK(v.satisfied);
        CHECK(v.containment == MultiplicityVerdict::Containment::g_above_f);
    }
    CHECK_THROWS_AS(multiplicity_condition(P("x^2y^3 + x^3"), P("x+y")), precondition_error);
}

TEST_CASE("multiplicity_condition: witness equalizes degrees, symmetric verdict")
{
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> e(1, 6);
    int checked = 0;
    for (int iter = 0; iter < 200 && checked < 60; ++iter) {
        Polynomial f(xy), g(xy);
        f.add_term({e(rng), 0}, 1);
        f.add_term({0, e(rng)}, 1);
        if (iter % 2) f.add_term({e(rng), e(rng)}, 1);
        g.add_term({e(rng), 0}, 1);
        g.add_term({0, e(rng)}, 1);
        if (iter % 3) g.add_term({e(rng), e(rng)}, 1);
        const auto v1 = multiplicity_condition(f, g);
        const auto v2 = multiplicity_condition(g, f);
        CHECK(v1.satisfied == v2.satisfied);
        if (!v1.satisfied) {
            CHECK(weighted_degree(*v1.witness, f) == weighted_degree(*v1.witness, g));
            CHECK(weighted_degree(*v2.witness, f) == weighted_degree(*v2.witness, g));
        } else {
            CHECK(v1.containment != v2.containment);
        }
        ++checked;
    }
    CHECK(checked >= 60);
}

TEST_CASE("newton_number_2d: spec examples")
{
    CHECK(newton_number_2d(P("x^2+y^3")) == 2);
    CHECK(newton_number_2d(P("x^2+y^2")) == 1);
    CHECK(newton_number_2d(P("x^3+y^3")) == 4);
    CHECK_THROWS_AS(newton_number_2d(P("x^2y + x^3")), precondition_error);
}

TEST_CASE("nondegeneracy_2d: spec examples")
{
    CHECK(nondegeneracy_2d(P("x^2+y^2")).nondegenerate);
    {
        auto r = nondegeneracy_2d(P("x^2+2xy+y^2"));
        CHECK(!r.nondegenerate);
        REQUIRE(r.failing_face.has_value());
        CHECK(*r.failing_face == WeightVector({1, 1}));
    }
    CHECK(nondegeneracy_2d(P("x^5+x^2y^2+y^6")).nondegenerate);
}

TEST_CASE("pair_nondegeneracy_2d: spec examples")
{
    CHECK(pair_nondegeneracy_2d(P("x^2+y^2"), P("x^2-y^2")));
    CHECK(!pair_nondegeneracy_2d(P("x^2+y^2"), P("x^4-y^4")));
    CHECK(pair_nondegeneracy_2d(P("x^3+y^2"), P("x^2+y^2"))); // no shared edge normal
}

TEST_CASE("sum of d * lattice-length over edges equals 2 Area")
{
    for (const char* s : {"x^2+y^3", "x^3+y^3", "x^5+x^2y^2+y^6", "x^4+x^2y^3+xy^5+y^7"}) {
        const Polynomial f = P(s);
        const auto nd = newton_boundary(f);
        Integer lhs = 0;
        for (const auto& e : nd.polygon.edges) lhs += Integer(e.d) * e.lattice_length;
        CHECK(lhs == polygon_double_area(nd.polygon));
    }
}

TEST_CASE("n = 3 boundary: quadric cone has 7 compact faces")
{
    const std::vector<std::string> z3 = {"z1", "z2", "z3"};
    auto nd = newton_boundary(parse_polynomial("z1^2+z2^2+z3^2", z3));
    CHECK(nd.boundary_vertices.size() == 3);
    int by_dim[3] = {0, 0, 0};
    for (const auto& f : nd.faces) {
        REQUIRE(f.dim <= 2);
        by_dim[f.dim]++;
        // the representative normal supports the face at its weighted degree
        for (const auto& pt : f.lattice_points) {
            std::int64_t v = 0;
            for (std::size_t i = 0; i < 3; ++i) v += f.normal[i] * pt[i];
            CHECK(v == f.d);
        }
    }
    CHECK(by_dim[0] == 3);
    CHECK(by_dim[1] == 3);
    CHECK(by_dim[2] == 1);
    CHECK(nd.convenient);
}

TEST_CASE("n = 3 multiplicity condition via exact feasibility search")
{
    const std::vector<std::string> z3 = {"z1", "z2", "z3"};
    const auto f = parse_polynomial("z1^2+z2^2+z3^2", z3);
    const auto g = parse_polynomial("z1+z2+z3", z3);
    auto v = multiplicity_condition(f, g);
    CHECK(v.satisfied); // quadric strictly above the hyperplane germ
    CHECK(v.containment == MultiplicityVerdict::Containment::f_above_g);

    // equal degrees: violated, witness equalizes
    const auto h = parse_polynomial("z1^2+z2^2+z3^3", z3);
    auto w = multiplicity_condition(f, h);
    CHECK(!w.satisfied);
    REQUIRE(w.witness.has_value());
    CHECK(weighted_degree(*w.witness, f) == weighted_degree(*w.witness, h));
}

TEST_CASE("dd_extreme_rays: octant and a known cone")
{
    // {y : y_i >= 0} has the standard basis as extreme rays
    std::vector<QVec> rows;
    for (int i = 0; i < 3; ++i) {
        QVec r(3, Rational(0));
        r[i] = 1;
        rows.push_back(r);
    }
    auto rays = dd_extreme_rays(rows);
    CHECK(rays.size() == 3);

    // cone {x>=0, y>=0, x+y-z>=0, z>=0} in R^3: rays (1,0,0),(0,1,0),(1,0,1),(0,1,1)
    rows.clear();
    rows.push_back({Rational(1), Rational(0), Rational(0)});
    rows.push_back({Rational(0), Rational(1), Rational(0)});
    rows.push_back({Rational(1), Rational(1), Rational(-1)});
    rows.push_back({Rational(0), Rational(0), Rational(1)});
    rays = dd_extreme_rays(rows);
    CHECK(rays.size() == 4);
    std::set<IVec> got(rays.begin(), rays.end());
    CHECK(got.count(IVec{1, 0, 0}) == 1);
    CHECK(got.count(IVec{0, 1, 0}) == 1);
    CHECK(got.count(IVec{1, 0, 1}) == 1);
    CHECK(got.count(IVec{0, 1, 1}) == 1);
}
