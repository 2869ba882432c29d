#include "milnor/polytope_nd.hpp"

#include "milnor/lp.hpp"

#include <algorithm>
#include <set>

namespace milnor {

namespace {

Rational dot(const QVec& a, const QVec& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Rank of a list of rational row vectors (Gaussian elimination).
int rank_of(std::vector<QVec> rows)
{
    int rank = 0;
    const std::size_t d = rows.empty() ? 0 : rows[0].size();
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows.size() && col < d; ++col) {
        std::size_t piv = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][col] != 0) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Rational f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < d; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

IVec primitive_int(const QVec& v)
{
    Integer l = 1;
    for (const auto& q : v) l = l / int_gcd(l, rat_den(q)) * rat_den(q);
    std::vector<Integer> w;
    w.reserve(v.size());
    for (const auto& q : v) w.push_back(rat_num(q) * (l / rat_den(q)));
    Integer g = 0;
    for (const auto& x : w) g = int_gcd(g, x);
    IVec out(v.size(), 0);
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Integer(w[i] / g).convert_to<std::int64_t>();
    return out;
}

QVec to_qvec(const IVec& v)
{
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    return q;
}

} // namespace

std::vector<IVec> dd_extreme_rays(const std::vector<QVec>& rows)
{
    if (rows.empty()) throw precondition_error("dd: no halfspaces");
    const std::size_t d = rows[0].size();

    std::vector<QVec> lineality;
    for (std::size_t i = 0; i < d; ++i) {
        QVec e(d, Rational(0));
        e[i] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<QVec> rays;

    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        const QVec& a = rows[ri];
        // lineality reduction first
        std::size_t lstar = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]) != 0) { lstar = i; break; }
        if (lstar != lineality.size()) {
            QVec l = lineality[lstar];
            lineality.erase(lineality.begin() + lstar);
            const Rational al = dot(a, l);
            for (auto& other : lineality) {
                const Rational f = dot(a, other) / al;
                for (std::size_t j = 0; j < d; ++j) other[j] -= f * l[j];
            }
            for (auto& r : rays) {
                const Rational f = dot(a, r) / al;
                for (std::size_t j = 0; j < d; ++j) r[j] -= f * l[j];
            }
            if (al < 0)
                for (auto& x : l) x = -x;
            rays.push_back(std::move(l)); // the positive side of the split
            continue;
        }

        // partition rays by sign against a
        std::vector<QVec> plus, zero, minus;
        for (auto& r : rays) {
            const Rational s = dot(a, r);
            if (s > 0) plus.push_back(std::move(r));
            else if (s == 0) zero.push_back(std::move(r));
            else minus.push_back(std::move(r));
        }
        if (minus.empty()) {
            rays = std::move(plus);
            for (auto& z : zero) rays.push_back(std::move(z));
            continue;
        }

        // adjacency via exact rank on the processed rows active at both rays
        const int want = static_cast<int>(d) - static_cast<int>(lineality.size()) - 2;
        std::vector<QVec> next = plus;
        for (auto& z : zero) next.push_back(z);
        for (const auto& rp : plus) {
            for (const auto& rm : minus) {
                std::vector<QVec> active;
                for (std::size_t k = 0; k < ri; ++k)
                    if (dot(rows[k], rp) == 0 && dot(rows[k], rm) == 0)
                        active.push_back(rows[k]);
                if (rank_of(active) != want) continue;
                const Rational sp = dot(a, rp), sm = dot(a, rm);
                QVec combo(d);
                for (std::size_t j = 0; j < d; ++j) combo[j] = sp * rm[j] - sm * rp[j];
                // rescale to primitive form to keep numbers small
                next.push_back(to_qvec(primitive_int(combo)));
            }
        }
        rays = std::move(next);
    }

    if (!lineality.empty())
        throw precondition_error("dd: cone is not pointed");

    std::set<IVec> dedup;
    for (const auto& r : rays) dedup.insert(primitive_int(r));
    return {dedup.begin(), dedup.end()};
}

int affine_dim(const std::vector<IVec>& pts)
{
    if (pts.empty()) return -1;
    std::vector<QVec> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec r(pts[i].size());
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = Rational(pts[i][j] - pts[0][j]);
        rows.push_back(std::move(r));
    }
    return rank_of(rows);
}

std::vector<NdFace> newton_faces_nd(const std::vector<IVec>& support)
{
    if (support.empty()) throw precondition_error("newton_faces_nd: empty support");
    const std::size_t n = support[0].size();
    if (support.size() > 64)
        throw precondition_error("newton_faces_nd: support larger than 64 points is not supported");

    // facets of cone{(1,s)} + cone{(0,e_i)} are extreme rays of its polar
    std::vector<QVec> half;
    for (const auto& s : support) {
        QVec row(n + 1);
        row[0] = 1;
        for (std::size_t i = 0; i < n; ++i) row[i + 1] = Rational(s[i]);
        half.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n; ++i) {
        QVec row(n + 1, Rational(0));
        row[i + 1] = 1;
        half.push_back(std::move(row));
    }
    const auto facet_rays = dd_extreme_rays(half);

    // candidate faces: facet point sets closed under intersection
    std::set<std::vector<std::size_t>> candidates;
    for (const auto& ray : facet_rays) {
        std::vector<std::size_t> pts;
        for (std::size_t si = 0; si < support.size(); ++si) {
            Integer v = ray[0];
            for (std::size_t i = 0; i < n; ++i) v += Integer(ray[i + 1]) * support[si][i];
            if (v == 0) pts.push_back(si);
        }
        if (!pts.empty()) candidates.insert(pts);
    }
    while (true) {
        std::set<std::vector<std::size_t>> grown = candidates;
        for (const auto& a : candidates) {
            for (const auto& b : candidates) {
                std::vector<std::size_t> inter;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(inter));
                if (!inter.empty()) grown.insert(inter);
            }
        }
        if (grown.size() == candidates.size()) break;
        candidates = std::move(grown);
    }

    // validate each candidate: exists strictly positive P with argmin exactly it
    std::vector<NdFace> faces;
    for (const auto& cand : candidates) {
        LPProblem lp(n);
        const IVec& u0 = support[cand[0]];
        for (std::size_t k = 1; k < cand.size(); ++k) {
            QVec row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = Rational(support[cand[k]][i] - u0[i]);
            lp.add_constraint(row, LPRelation::eq, 0);
        }
        std::set<std::size_t> in_cand(cand.begin(), cand.end());
        for (std::size_t si = 0; si < support.size(); ++si) {
            if (in_cand.count(si)) continue;
            QVec row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = Rational(support[si][i] - u0[i]);
            lp.add_constraint(row, LPRelation::ge, 1);
        }
        for (std::size_t i = 0; i < n; ++i) {
            QVec row(n, Rational(0));
            row[i] = 1;
            lp.add_constraint(row, LPRelation::ge, 1);
        }
        auto res = lp.solve();
        if (res.status != LPStatus::optimal) continue;

        NdFace f;
        f.normal = primitive_int(res.x);
        std::int64_t dval = 0;
        for (std::size_t i = 0; i < n; ++i) dval += f.normal[i] * u0[i];
        f.d = dval;
        for (auto si : cand) f.points.push_back(support[si]);
        f.dim = affine_dim(f.points);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const NdFace& a, const NdFace& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.points < b.points;
    });
    return faces;
}

} // namespace milnor
