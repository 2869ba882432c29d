#include "milnor/zeta.hpp"

#include "milnor/bipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace milnor {

void ZetaFactored::add_factor(std::int64_t d, std::int64_t e)
{
    if (d < 1) throw precondition_error("zeta factor: exponent base must be positive");
    if (e == 0) return;
    factors_.emplace_back(d, e);
}

void ZetaFactored::normalize()
{
    std::map<std::int64_t, std::int64_t> merged;
    for (const auto& [d, e] : factors_) merged[d] += e;
    factors_.clear();
    for (const auto& [d, e] : merged)
        if (e != 0) factors_.emplace_back(d, e);
}

std::int64_t ZetaFactored::degree() const
{
    std::int64_t s = 0;
    for (const auto& [d, e] : factors_) s += d * e;
    return s;
}

std::string ZetaFactored::str() const
{
    if (factors_.empty()) return "1";
    std::ostringstream out;
    for (const auto& [d, e] : factors_) {
        out << (d == 1 ? "(1-t)" : "(1-t^" + std::to_string(d) + ")");
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

namespace {

struct PlaneData {
    NewtonData nd;
    std::vector<FaceFunction> edges; // by increasing slope
};

PlaneData plane_checked(const Polynomial& f, const char* who)
{
    if (f.nvars() != 2) throw precondition_error(std::string(who) + ": needs two variables");
    PlaneData pd;
    pd.nd = newton_boundary(f);
    if (!pd.nd.convenient)
        throw precondition_error(std::string(who) + ": polynomial is not convenient");
    for (const auto& face : pd.nd.faces) {
        FaceFunction ff = face_function(f, face.normal);
        const auto& E = ff.edge_polynomial;
        if (up_degree(E) >= 1 && ff.distinct_roots != up_degree(E)) {
            throw precondition_error(std::string(who) + ": degenerate face at P=(" +
                                     std::to_string(face.normal[0]) + "," +
                                     std::to_string(face.normal[1]) + ")");
        }
        pd.edges.push_back(std::move(ff));
    }
    return pd;
}

/// union of edge normals of both boundaries, sorted by increasing slope
std::vector<WeightVector> union_normals(const PlaneData& a, const PlaneData& b)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> rays;
    for (const auto& e : a.nd.faces) rays.push_back({e.normal[0], e.normal[1]});
    for (const auto& e : b.nd.faces) rays.push_back({e.normal[0], e.normal[1]});
    std::sort(rays.begin(), rays.end(),
              [](auto x, auto y) { return x.first * y.second < y.first * x.second; });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    std::vector<WeightVector> out;
    for (auto [p, q] : rays) out.push_back(WeightVector({p, q}));
    return out;
}

} // namespace

ZetaFactored zeta_plane(const Polynomial& f)
{
    PlaneData pd = plane_checked(f, "zeta_plane");
    ZetaFactored z;
    z.add_factor(*pd.nd.intercepts[0], 1);
    z.add_factor(*pd.nd.intercepts[1], 1);
    for (const auto& ff : pd.edges)
        if (ff.distinct_roots >= 1) z.add_factor(ff.d, -ff.distinct_roots);
    z.normalize();
    return z;
}

ZetaFactored zeta_plane_product(const Polynomial& f, const Polynomial& g)
{
    PlaneData pf = plane_checked(f, "zeta_plane_product");
    PlaneData pg = plane_checked(g, "zeta_plane_product");
    if (!pair_nondegeneracy_2d(f, g))
        throw precondition_error("zeta_plane_product: face functions on a shared edge have a "
                                 "common non-monomial factor (pair degeneracy)");
    ZetaFactored z;
    z.add_factor(*pf.nd.intercepts[0] + *pg.nd.intercepts[0], 1);
    z.add_factor(*pf.nd.intercepts[1] + *pg.nd.intercepts[1], 1);
    for (const auto& P : union_normals(pf, pg)) {
        const FaceFunction ff = face_function(f, P);
        const FaceFunction fg = face_function(g, P);
        const std::int64_t l = ff.distinct_roots, m = fg.distinct_roots;
        if (l + m >= 1) z.add_factor(ff.d + fg.d, -(l + m));
    }
    z.normalize();
    return z;
}

ZetaFactored zeta_mixed_plane(const Polynomial& f, const Polynomial& g)
{
    PlaneData pf = plane_checked(f, "zeta_mixed_plane");
    PlaneData pg = plane_checked(g, "zeta_mixed_plane");
    if (!pair_nondegeneracy_2d(f, g))
        throw precondition_error("zeta_mixed_plane: pair degeneracy on a shared edge");
    const MultiplicityVerdict mv = multiplicity_condition(f, g);
    if (!mv.satisfied) {
        const auto& w = *mv.witness;
        throw precondition_error("Newton multiplicity condition violated; witness P=(" +
                                 std::to_string(w[0]) + "," + std::to_string(w[1]) + ")");
    }
    const bool f_up = mv.containment == MultiplicityVerdict::Containment::f_above_g;
    const Polynomial& hi = f_up ? f : g;
    const Polynomial& lo = f_up ? g : f;
    const PlaneData& phi = f_up ? pf : pg;
    const PlaneData& plo = f_up ? pg : pf;

    ZetaFactored z;
    z.add_factor(*phi.nd.intercepts[0] - *plo.nd.intercepts[0], 1);
    z.add_factor(*phi.nd.intercepts[1] - *plo.nd.intercepts[1], 1);
    for (const auto& P : union_normals(pf, pg)) {
        const FaceFunction fhi = face_function(hi, P);
        const FaceFunction flo = face_function(lo, P);
        const std::int64_t l = fhi.distinct_roots, m = flo.distinct_roots;
        const std::int64_t diff = fhi.d - flo.d;
        if (diff <= 0)
            throw truncation_error("zeta_mixed_plane: containment direction violated on an edge");
        if (l + m >= 1) z.add_factor(diff, -(l + m));
    }
    z.normalize();
    return z;
}

std::int64_t milnor_from_zeta(const ZetaFactored& z)
{
    return 1 - z.degree();
}

// ---------------------------------------------------------------------------
// homogeneous 3-variable case

namespace {

/// Deterministic small-rational pseudo-random stream for the sanity chart.
struct DetRng {
    std::uint64_t s = 0x9E3779B97F4A7C15ull;
    std::int64_t next_small()
    {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::int64_t>((s >> 33) % 7) - 3; // -3..3
    }
};

/// p(A w) for a 3x3 integer matrix A.
Polynomial linear_change(const Polynomial& p, const std::array<std::array<std::int64_t, 3>, 3>& A)
{
    const auto& vars = p.variables();
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < 3; ++i) {
        Polynomial li(vars);
        for (std::size_t j = 0; j < 3; ++j) {
            ExponentVector ev(3, 0);
            ev[j] = 1;
            li = li + Polynomial::monomial(vars, ev, Rational(A[i][j]));
        }
        forms.push_back(li);
    }
    Polynomial out(vars);
    for (const auto& [ev, c] : p.terms()) {
        Polynomial term = Polynomial::constant(vars, c);
        for (std::size_t i = 0; i < 3; ++i)
            if (ev[i] > 0) term = term * forms[i].pow(ev[i]);
        out = out + term;
    }
    return out;
}

/// substitute z3 = 1, drop to two variables
Polynomial dehomogenize(const Polynomial& p)
{
    std::vector<std::string> v2 = {p.variables()[0], p.variables()[1]};
    Polynomial out(v2);
    for (const auto& [ev, c] : p.terms()) out.add_term({ev[0], ev[1]}, c);
    return out;
}

std::int64_t det3(const std::array<std::array<std::int64_t, 3>, 3>& A)
{
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
           A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

} // namespace

Zeta3hResult zeta_mixed_homog3(const Polynomial& f, const Polynomial& g, bool sanity_check)
{
    if (f.nvars() != 3 || g.nvars() != 3)
        throw precondition_error("zeta_mixed_homog3: needs three variables");
    std::int64_t df = 0, dg = 0;
    if (!f.is_homogeneous(df) || !g.is_homogeneous(dg))
        throw precondition_error("zeta_mixed_homog3: inputs must be homogeneous");
    if (df == dg)
        throw precondition_error("zeta_mixed_homog3: equal degrees (polar degree 0, "
                                 "multiplicity condition fails)");

    Zeta3hResult out;
    out.polar_degree = df > dg ? df - dg : dg - df;
    const std::int64_t chi_f = 2 - (df - 1) * (df - 2);
    const std::int64_t chi_g = 2 - (dg - 1) * (dg - 2);
    const std::int64_t chi_union = chi_f + chi_g - df * dg;
    out.chi_Eprime = 3 - chi_union;
    out.zeta.add_factor(out.polar_degree, -out.chi_Eprime);
    out.zeta.normalize();

    if (sanity_check) {
        DetRng rng;
        std::array<std::array<std::int64_t, 3>, 3> A{};
        Polynomial fa(f.variables()), ga(g.variables());
        for (int attempt = 0; attempt < 32; ++attempt) {
            for (auto& row : A)
                for (auto& x : row) x = rng.next_small();
            if (det3(A) == 0) continue;
            fa = dehomogenize(linear_change(f, A));
            ga = dehomogenize(linear_change(g, A));
            // require full degree in the second variable with constant lead
            if (fa.max_exponent(1) == df && ga.max_exponent(1) == dg) break;
        }
        if (fa.is_zero() || fa.max_exponent(1) != df || ga.max_exponent(1) != dg) {
            out.warnings.push_back("sanity chart: no usable random chart found");
            return out;
        }
        // Bezout count on the chart: distinct roots of the resultant
        UPoly R = bipoly_resultant(fa, ga, 1);
        if (up_is_zero(R)) {
            out.warnings.push_back("intersection check: resultant vanishes (common component?)");
        } else if (up_degree(R) != df * dg) {
            out.warnings.push_back("intersection check: resultant degree " +
                                   std::to_string(up_degree(R)) + " != Bezout number " +
                                   std::to_string(df * dg));
        } else {
            auto [sf, distinct] = up_squarefree_part(R);
            if (distinct != df * dg)
                out.warnings.push_back("transversality check: only " + std::to_string(distinct) +
                                       " distinct intersections of " + std::to_string(df * dg));
        }
        // smoothness spot check: discriminant squarefree on the random chart
        for (const auto* pp : {&fa, &ga}) {
            const std::int64_t deg = (pp == &fa) ? df : dg;
            if (deg <= 1) continue;
            UPoly D = bipoly_resultant(*pp, differentiate(*pp, pp->variables()[1]), 1);
            bool bad = up_is_zero(D);
            if (!bad && up_degree(D) >= 1) {
                auto [sf, cnt] = up_squarefree_part(D);
                bad = cnt != up_degree(D);
            }
            if (bad)
                out.warnings.push_back(std::string("smoothness check: discriminant of ") +
                                       ((pp == &fa) ? "f" : "g") +
                                       " is not squarefree on the random chart");
        }
    }
    return out;
}

} // namespace milnor
