#include "milnor/bipoly.hpp"

#include <algorithm>

namespace milnor {

Polynomial divide_exact(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw precondition_error("divide_exact: division by zero");
    if (a.variables() != b.variables()) throw precondition_error("divide_exact: variable mismatch");
    Polynomial r = a;
    Polynomial q(a.variables());
    const auto& bt = *b.terms().begin(); // graded-lex leading term of b
    while (!r.is_zero()) {
        const auto& rt = *r.terms().begin();
        ExponentVector diff(rt.first.size());
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] = rt.first[i] - bt.first[i];
            if (diff[i] < 0) throw precondition_error("divide_exact: not divisible");
        }
        const Rational c = rt.second / bt.second;
        Polynomial mono = Polynomial::monomial(a.variables(), diff, c);
        q = q + mono;
        r = r - mono * b;
    }
    return q;
}

namespace {

/// Dense y-major view: coefficient of y^i is a UPoly in x.
struct YMajor {
    std::vector<UPoly> c;

    std::int64_t deg() const
    {
        for (std::size_t i = c.size(); i-- > 0;)
            if (!c[i].empty()) return static_cast<std::int64_t>(i);
        return -1;
    }
    void trim()
    {
        while (!c.empty() && c.back().empty()) c.pop_back();
    }
    bool zero() const { return deg() < 0; }
};

YMajor to_ymajor(const Polynomial& p, std::size_t yvar)
{
    const std::size_t xvar = 1 - yvar;
    YMajor m;
    for (const auto& [ev, coeff] : p.terms()) {
        const std::size_t yi = static_cast<std::size_t>(ev[yvar]);
        const std::size_t xi = static_cast<std::size_t>(ev[xvar]);
        if (m.c.size() <= yi) m.c.resize(yi + 1);
        auto& row = m.c[yi];
        if (row.size() <= xi) row.resize(xi + 1, Rational(0));
        row[xi] = coeff;
    }
    for (auto& row : m.c) row = up_trim(std::move(row));
    return m;
}

Polynomial from_ymajor(const YMajor& m, const std::vector<std::string>& vars, std::size_t yvar)
{
    const std::size_t xvar = 1 - yvar;
    Polynomial p(vars);
    for (std::size_t yi = 0; yi < m.c.size(); ++yi) {
        for (std::size_t xi = 0; xi < m.c[yi].size(); ++xi) {
            if (m.c[yi][xi] == 0) continue;
            ExponentVector ev(2, 0);
            ev[yvar] = static_cast<std::int64_t>(yi);
            ev[xvar] = static_cast<std::int64_t>(xi);
            p.add_term(ev, m.c[yi][xi]);
        }
    }
    return p;
}

UPoly content_of(const YMajor& m)
{
    UPoly g;
    for (const auto& row : m.c)
        if (!row.empty()) g = up_gcd(g, row);
    return g;
}

YMajor divide_content(const YMajor& m, const UPoly& content)
{
    YMajor r;
    r.c.reserve(m.c.size());
    for (const auto& row : m.c)
        r.c.push_back(row.empty() ? UPoly{} : up_divexact(row, content));
    return r;
}

/// Pseudo-remainder of a by b in y over Q[x].
YMajor pseudo_rem(YMajor a, const YMajor& b)
{
    const std::int64_t db = b.deg();
    const UPoly& lb = b.c[db];
    while (true) {
        a.trim();
        const std::int64_t da = a.deg();
        if (da < db) return a;
        // a <- lb * a - lead(a) * y^(da-db) * b
        YMajor next;
        next.c.assign(std::max<std::size_t>(a.c.size(), 1), UPoly{});
        const UPoly la = a.c[da];
        for (std::size_t i = 0; i < a.c.size(); ++i)
            next.c[i] = up_mul(a.c[i], lb);
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            const std::size_t at = i + static_cast<std::size_t>(da - db);
            if (next.c.size() <= at) next.c.resize(at + 1);
            next.c[at] = up_sub(next.c[at], up_mul(la, b.c[i]));
        }
        a = std::move(next);
    }
}

} // namespace

Polynomial bipoly_gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars() != 2 || b.nvars() != 2)
        throw precondition_error("bipoly_gcd: needs two variables");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;

    const std::size_t yvar = 1;
    YMajor A = to_ymajor(a, yvar), B = to_ymajor(b, yvar);
    const UPoly ca = content_of(A), cb = content_of(B);
    const UPoly cg = up_gcd(ca, cb);
    A = divide_content(A, ca);
    B = divide_content(B, cb);

    // primitive PRS on the primitive parts
    if (A.deg() < B.deg()) std::swap(A, B);
    while (!B.zero() && B.deg() >= 1) {
        YMajor r = pseudo_rem(A, B);
        r.trim();
        if (!r.zero()) {
            const UPoly cr = content_of(r);
            r = divide_content(r, cr);
        }
        A = std::move(B);
        B = std::move(r);
    }
    YMajor prim;
    if (B.zero()) {
        prim = A; // gcd of primitive parts is the last nonzero
    } else {
        // remainder of degree 0 in y: primitive parts are coprime
        prim.c = {UPoly{Rational(1)}};
    }
    YMajor out;
    out.c.reserve(prim.c.size());
    for (const auto& row : prim.c) out.c.push_back(up_mul(row, cg));
    Polynomial g = from_ymajor(out, a.variables(), yvar);
    if (!g.is_zero()) {
        const Rational lead = g.terms().begin()->second;
        g = g.scaled(Rational(1) / lead);
    }
    return g;
}

UPoly bipoly_resultant(const Polynomial& a, const Polynomial& b, std::size_t var_index)
{
    if (a.nvars() != 2 || b.nvars() != 2)
        throw precondition_error("bipoly_resultant: needs two variables");
    YMajor A = to_ymajor(a, var_index), B = to_ymajor(b, var_index);
    const std::int64_t m = A.deg(), n = B.deg();
    if (m < 0 || n < 0) return {};
    if (m == 0 && n == 0) return {Rational(1)};

    // Sylvester matrix over Q[x], fraction-free Bareiss elimination
    const std::size_t k = static_cast<std::size_t>(m + n);
    std::vector<std::vector<UPoly>> M(k, std::vector<UPoly>(k));
    for (std::int64_t r = 0; r < n; ++r)
        for (std::int64_t j = 0; j <= m; ++j)
            M[r][r + (m - j)] = (j < static_cast<std::int64_t>(A.c.size())) ? A.c[j] : UPoly{};
    for (std::int64_t r = 0; r < m; ++r)
        for (std::int64_t j = 0; j <= n; ++j)
            M[n + r][r + (n - j)] = (j < static_cast<std::int64_t>(B.c.size())) ? B.c[j] : UPoly{};

    UPoly prev{Rational(1)};
    int sign = 1;
    for (std::size_t step = 0; step + 1 < k; ++step) {
        // pivot search
        std::size_t piv = k;
        for (std::size_t r = step; r < k; ++r)
            if (!M[r][step].empty()) { piv = r; break; }
        if (piv == k) return {}; // zero column: resultant vanishes identically
        if (piv != step) {
            std::swap(M[piv], M[step]);
            sign = -sign;
        }
        for (std::size_t i = step + 1; i < k; ++i) {
            for (std::size_t j = step + 1; j < k; ++j) {
                UPoly t = up_sub(up_mul(M[i][j], M[step][step]), up_mul(M[i][step], M[step][j]));
                M[i][j] = t.empty() ? UPoly{} : up_divexact(t, prev);
            }
            M[i][step] = {};
        }
        prev = M[step][step];
    }
    UPoly det = M[k - 1][k - 1];
    if (sign < 0) det = up_scale(det, Rational(-1));
    return det;
}

Polynomial squarefree_germ(const Polynomial& k)
{
    if (k.nvars() != 2) throw precondition_error("squarefree_germ: needs two variables");
    const Polynomial ky = differentiate(k, k.variables()[1]);
    if (ky.is_zero()) {
        // k is y-free; x-only factors are either axis powers (caller strips
        // those) or units at the origin, so reduce to its squarefree part
        YMajor A = to_ymajor(k, 1);
        auto [sf, cnt] = up_squarefree_part(A.c[0]);
        YMajor out;
        out.c = {sf};
        return from_ymajor(out, k.variables(), 1);
    }
    const Polynomial g = bipoly_gcd(k, ky);
    return divide_exact(k, g);
}

bool has_common_germ_factor(const Polynomial& f, const Polynomial& g)
{
    const Polynomial d = bipoly_gcd(f, g);
    if (d.is_zero()) return true; // both inputs zero
    // a common factor matters for the germ only when it vanishes at 0
    return !d.has_constant_term();
}

} // namespace milnor
