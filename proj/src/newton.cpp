#include "milnor/newton.hpp"

#include "milnor/lp.hpp"

#include <algorithm>
#include <numeric>

namespace milnor {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

} // namespace

WeightVector::WeightVector(std::vector<std::int64_t> v) : w(std::move(v))
{
    if (w.empty()) throw precondition_error("weight vector: empty");
    std::int64_t g = 0;
    for (auto x : w) {
        if (x <= 0) throw precondition_error("weight vector: entries must be strictly positive");
        g = gcd64(g, x);
    }
    if (g > 1)
        for (auto& x : w) x /= g;
}

std::vector<IVec> support_of(const Polynomial& p)
{
    std::vector<IVec> s;
    s.reserve(p.term_count());
    for (const auto& [ev, c] : p.terms()) s.emplace_back(ev.begin(), ev.end());
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<LatticePoint> support_2d(const Polynomial& p)
{
    if (p.nvars() != 2) throw precondition_error("expected a 2-variable polynomial");
    std::vector<LatticePoint> s;
    for (const auto& [ev, c] : p.terms()) s.push_back({ev[0], ev[1]});
    return s;
}

NewtonData newton_boundary(const Polynomial& p)
{
    if (p.is_zero()) throw precondition_error("newton_boundary: zero polynomial");
    if (p.has_constant_term())
        throw precondition_error("newton_boundary: nonzero constant term (p(0) != 0)");

    NewtonData nd;
    nd.n = p.nvars();
    nd.support = support_of(p);

    // axis intercepts: minimal pure power per axis
    nd.intercepts.assign(nd.n, std::nullopt);
    for (const auto& pt : nd.support) {
        std::size_t nz = 0, which = 0;
        for (std::size_t i = 0; i < nd.n; ++i)
            if (pt[i] != 0) { ++nz; which = i; }
        if (nz == 1) {
            auto& cur = nd.intercepts[which];
            if (!cur || pt[which] < *cur) cur = pt[which];
        }
    }
    nd.convenient = true;
    for (const auto& ic : nd.intercepts)
        if (!ic) nd.convenient = false;

    if (nd.n == 2) {
        nd.polygon = newton_polygon(support_2d(p));
        for (const auto& v : nd.polygon.vertices) nd.boundary_vertices.push_back({v[0], v[1]});
        for (const auto& e : nd.polygon.edges) {
            NewtonFace f;
            f.normal = WeightVector({e.p, e.q});
            f.d = e.d;
            f.dim = 1;
            // support points actually on the edge (subset of lattice points)
            for (const auto& pt : nd.support)
                if (e.p * pt[0] + e.q * pt[1] == e.d) f.lattice_points.push_back(pt);
            nd.faces.push_back(std::move(f));
        }
    } else {
        auto faces = newton_faces_nd(nd.support);
        for (auto& f : faces) {
            if (f.dim == 0) nd.boundary_vertices.push_back(f.points[0]);
            NewtonFace nf;
            nf.normal = WeightVector(f.normal);
            nf.d = f.d;
            nf.dim = f.dim;
            nf.lattice_points = std::move(f.points);
            nd.faces.push_back(std::move(nf));
        }
        std::sort(nd.boundary_vertices.begin(), nd.boundary_vertices.end());
    }
    return nd;
}

std::int64_t weighted_degree(const WeightVector& P, const Polynomial& p)
{
    if (p.is_zero()) throw precondition_error("weighted_degree: zero polynomial");
    if (P.size() != p.nvars()) throw precondition_error("weighted_degree: dimension mismatch");
    bool first = true;
    std::int64_t best = 0;
    for (const auto& [ev, c] : p.terms()) {
        std::int64_t v = 0;
        for (std::size_t i = 0; i < ev.size(); ++i) v += P[i] * ev[i];
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

FaceFunction face_function(const Polynomial& p, const WeightVector& P)
{
    FaceFunction out;
    out.normal = P;
    out.d = weighted_degree(P, p);
    Polynomial fp(p.variables());
    for (const auto& [ev, c] : p.terms()) {
        std::int64_t v = 0;
        for (std::size_t i = 0; i < ev.size(); ++i) v += P[i] * ev[i];
        if (v == out.d) fp.add_term(ev, c);
    }
    out.f_P = fp;

    if (p.nvars() == 2) {
        const std::int64_t pw = P[0], qw = P[1];
        std::int64_t maxx = -1, maxx_y = 0, minx = -1;
        for (const auto& [ev, c] : fp.terms()) {
            if (ev[0] > maxx) { maxx = ev[0]; maxx_y = ev[1]; }
            if (minx < 0 || ev[0] < minx) minx = ev[0];
        }
        out.offset_x = minx;
        std::int64_t miny = -1;
        for (const auto& [ev, c] : fp.terms())
            if (miny < 0 || ev[1] < miny) miny = ev[1];
        out.offset_y = miny;

        // E(s): coefficients read from the larger-x endpoint stepping (-q, +p)
        const std::int64_t L = (maxx - minx) / qw;
        UPoly E(L + 1, Rational(0));
        for (std::int64_t j = 0; j <= L; ++j) {
            ExponentVector ev = {maxx - j * qw, maxx_y + j * pw};
            E[j] = fp.coeff(ev);
        }
        out.edge_polynomial = up_trim(std::move(E));
        if (up_degree(out.edge_polynomial) >= 1)
            out.distinct_roots = up_squarefree_part(out.edge_polynomial).second;
        else
            out.distinct_roots = 0;
    }
    return out;
}

namespace {

/// Is every boundary vertex of `above` strictly above Gamma(`below`)?
/// Exact: u >= 0 and <R, u> > d_R for every compact edge of `below`.
bool strictly_above_2d(const NewtonData& above, const NewtonData& below)
{
    for (const auto& v : above.boundary_vertices) {
        for (const auto& e : below.polygon.edges)
            if (e.p * v[0] + e.q * v[1] <= e.d) return false;
    }
    return true;
}

std::optional<WeightVector> witness_2d(const Polynomial& f, const Polynomial& g,
                                       const NewtonData& nf, const NewtonData& ng)
{
    // refined-fan rays: all edge normals plus the two boundary sentinels
    std::vector<std::pair<std::int64_t, std::int64_t>> rays;
    rays.push_back({0, 1}); // slope 0 sentinel
    for (const auto& e : nf.polygon.edges) rays.push_back({e.p, e.q});
    for (const auto& e : ng.polygon.edges) rays.push_back({e.p, e.q});
    rays.push_back({1, 0}); // slope infinity sentinel
    std::sort(rays.begin(), rays.end(),
              [](auto a, auto b) { return a.first * b.second < b.first * a.second; });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    auto wdeg = [](std::int64_t p, std::int64_t q, const NewtonData& nd) {
        bool first = true;
        std::int64_t best = 0;
        for (const auto& pt : nd.support) {
            const std::int64_t v = p * pt[0] + q * pt[1];
            if (first || v < best) best = v;
            first = false;
        }
        return best;
    };

    // interior rays with equal degrees are witnesses outright
    for (std::size_t i = 1; i + 1 < rays.size(); ++i) {
        const auto [p, q] = rays[i];
        if (wdeg(p, q, nf) == wdeg(p, q, ng)) return WeightVector({p, q});
    }

    // per refined-fan cone: the degree difference is linear; find its zero
    auto argmin_vertex = [](std::int64_t p, std::int64_t q, const NewtonData& nd) {
        std::optional<LatticePoint> best;
        std::int64_t bv = 0;
        for (const auto& v : nd.boundary_vertices) {
            const std::int64_t val = p * v[0] + q * v[1];
            if (!best || val < bv) {
                best = LatticePoint{v[0], v[1]};
                bv = val;
            }
        }
        return *best;
    };

    for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
        const auto [p1, q1] = rays[i];
        const auto [p2, q2] = rays[i + 1];
        const std::int64_t mp = p1 + p2, mq = q1 + q2; // mediant: interior of the cone
        const LatticePoint u = argmin_vertex(mp, mq, nf);
        const LatticePoint v = argmin_vertex(mp, mq, ng);
        if (u == v) return WeightVector({mp, mq}); // degree difference vanishes on the cone
        const std::int64_t dx = u[0] - v[0], dy = u[1] - v[1];
        std::int64_t wp = dy, wq = -dx; // perpendicular to u - v
        if (wp < 0 || wq < 0) { wp = -wp; wq = -wq; }
        if (wp <= 0 || wq <= 0) continue; // zero line leaves the positive quadrant
        // strict interior test: slope between the cone's bounding slopes
        const bool above_lo = wp * q1 > p1 * wq;
        const bool below_hi = wp * q2 < p2 * wq;
        if (!(above_lo && below_hi)) continue;
        WeightVector P({wp, wq});
        if (weighted_degree(P, f) == weighted_degree(P, g)) return P;
    }
    return std::nullopt;
}

std::optional<WeightVector> witness_nd(const std::vector<IVec>& Sf, const std::vector<IVec>& Sg)
{
    const std::size_t n = Sf[0].size();
    for (const auto& u : Sf) {
        for (const auto& v : Sg) {
            LPProblem lp(n);
            for (const auto& u2 : Sf) {
                if (u2 == u) continue;
                QVec row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = Rational(u2[i] - u[i]);
                lp.add_constraint(row, LPRelation::ge, 0);
            }
            for (const auto& v2 : Sg) {
                if (v2 == v) continue;
                QVec row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = Rational(v2[i] - v[i]);
                lp.add_constraint(row, LPRelation::ge, 0);
            }
            {
                QVec row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = Rational(u[i] - v[i]);
                lp.add_constraint(row, LPRelation::eq, 0);
            }
            for (std::size_t i = 0; i < n; ++i) {
                QVec row(n, Rational(0));
                row[i] = 1;
                lp.add_constraint(row, LPRelation::ge, 1);
            }
            auto res = lp.solve();
            if (res.status != LPStatus::optimal) continue;
            // clear denominators, reduce
            Integer l = 1;
            for (const auto& qv : res.x) l = l / int_gcd(l, rat_den(qv)) * rat_den(qv);
            std::vector<Integer> w;
            for (const auto& qv : res.x) w.push_back(rat_num(qv) * (l / rat_den(qv)));
            Integer gg = 0;
            for (const auto& x : w) gg = int_gcd(gg, x);
            std::vector<std::int64_t> wi;
            for (const auto& x : w) wi.push_back(Integer(x / gg).convert_to<std::int64_t>());
            return WeightVector(wi);
        }
    }
    return std::nullopt;
}

} // namespace

MultiplicityVerdict multiplicity_condition(const Polynomial& f, const Polynomial& g)
{
    if (f.nvars() != g.nvars()) throw precondition_error("multiplicity_condition: variable mismatch");
    NewtonData nf = newton_boundary(f);
    NewtonData ng = newton_boundary(g);
    if (!nf.convenient || !ng.convenient)
        throw precondition_error("multiplicity_condition: inputs must be convenient "
                                 "(Newton boundary meeting every axis)");

    MultiplicityVerdict out;
    if (f.nvars() == 2) {
        const bool f_up = strictly_above_2d(nf, ng);
        const bool g_up = strictly_above_2d(ng, nf);
        auto witness = witness_2d(f, g, nf, ng);
        // the two routes must agree: a witness exists iff neither side is
        // strictly above the other
        if ((f_up || g_up) == witness.has_value())
            throw truncation_error("multiplicity_condition: internal decision mismatch");
        if (witness) {
            out.satisfied = false;
            out.witness = witness;
        } else {
            out.satisfied = true;
            out.containment = f_up ? MultiplicityVerdict::Containment::f_above_g
                                   : MultiplicityVerdict::Containment::g_above_f;
        }
    } else {
        auto witness = witness_nd(nf.support, ng.support);
        if (witness) {
            out.satisfied = false;
            out.witness = witness;
        } else {
            out.satisfied = true;
            WeightVector ones(std::vector<std::int64_t>(f.nvars(), 1));
            out.containment = weighted_degree(ones, f) > weighted_degree(ones, g)
                                  ? MultiplicityVerdict::Containment::f_above_g
                                  : MultiplicityVerdict::Containment::g_above_f;
        }
    }
    if (out.witness) {
        if (weighted_degree(*out.witness, f) != weighted_degree(*out.witness, g))
            throw truncation_error("multiplicity_condition: witness does not equalize degrees");
    }
    return out;
}

std::int64_t newton_number_2d(const Polynomial& p)
{
    if (p.nvars() != 2) throw precondition_error("newton_number_2d: needs two variables");
    NewtonData nd = newton_boundary(p);
    if (!nd.convenient) throw precondition_error("newton_number_2d: polynomial is not convenient");
    const Integer two_area = polygon_double_area(nd.polygon);
    const Integer nn = two_area - *nd.intercepts[0] - *nd.intercepts[1] + 1;
    return nn.convert_to<std::int64_t>();
}

NondegeneracyResult nondegeneracy_2d(const Polynomial& f)
{
    if (f.nvars() != 2) throw precondition_error("nondegeneracy_2d: needs two variables");
    NewtonData nd = newton_boundary(f);
    for (const auto& face : nd.faces) {
        FaceFunction ff = face_function(f, face.normal);
        const auto& E = ff.edge_polynomial;
        if (up_degree(E) < 1) continue;
        auto [sf, cnt] = up_squarefree_part(E);
        if (cnt != up_degree(E))
            return {false, face.normal};
    }
    return {true, std::nullopt};
}

bool pair_nondegeneracy_2d(const Polynomial& f, const Polynomial& g)
{
    if (f.nvars() != 2 || g.nvars() != 2)
        throw precondition_error("pair_nondegeneracy_2d: needs two variables");
    NewtonData nf = newton_boundary(f);
    NewtonData ng = newton_boundary(g);
    for (const auto& ef : nf.faces) {
        for (const auto& eg : ng.faces) {
            if (!(ef.normal == eg.normal)) continue;
            UPoly Ef = face_function(f, ef.normal).edge_polynomial;
            UPoly Eg = face_function(g, eg.normal).edge_polynomial;
            UPoly h = up_gcd(Ef, Eg);
            if (up_degree(h) >= 1) return false;
        }
    }
    return true;
}

} // namespace milnor
