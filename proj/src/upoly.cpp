#include "milnor/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace milnor {

UPoly up_trim(UPoly p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

UPoly up_add(const UPoly& a, const UPoly& b)
{
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return up_trim(std::move(r));
}

UPoly up_sub(const UPoly& a, const UPoly& b)
{
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return up_trim(std::move(r));
}

UPoly up_mul(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return up_trim(std::move(r));
}

UPoly up_scale(const UPoly& a, const Rational& c)
{
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

UPoly up_derivative(const UPoly& p)
{
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(i);
    return up_trim(std::move(r));
}

Rational up_eval(const UPoly& p, const Rational& x)
{
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r)
{
    if (b.empty()) throw precondition_error("upoly division by zero");
    r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    const Rational lead = b.back();
    while (r.size() >= b.size() && !r.empty()) {
        const std::size_t shift = r.size() - b.size();
        const Rational f = r.back() / lead;
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        r = up_trim(std::move(r));
        if (r.size() < b.size()) break;
    }
    q = up_trim(std::move(q));
}

UPoly up_divexact(const UPoly& a, const UPoly& b)
{
    UPoly q, r;
    up_divmod(a, b, q, r);
    if (!r.empty()) throw precondition_error("upoly division not exact");
    return q;
}

UPoly up_gcd(UPoly a, UPoly b)
{
    a = up_trim(std::move(a));
    b = up_trim(std::move(b));
    while (!b.empty()) {
        UPoly q, r;
        up_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const Rational inv = Rational(1) / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

std::pair<UPoly, std::int64_t> up_squarefree_part(const UPoly& p_in)
{
    UPoly p = up_trim(p_in);
    if (p.empty()) throw precondition_error("squarefree_part: zero polynomial");
    if (p.size() == 1) return {p, 0};
    UPoly g = up_gcd(p, up_derivative(p));
    UPoly sf = up_divexact(p, g);
    return {sf, up_degree(sf)};
}

std::vector<std::pair<UPoly, std::int64_t>> up_squarefree_decomposition(const UPoly& p_in)
{
    UPoly p = up_trim(p_in);
    std::vector<std::pair<UPoly, std::int64_t>> out;
    if (up_degree(p) < 1) return out;
    // Yun's algorithm
    UPoly dp = up_derivative(p);
    UPoly a = up_gcd(p, dp);
    UPoly b = up_divexact(p, a);
    UPoly c = up_divexact(dp, a);
    UPoly d = up_sub(c, up_derivative(b));
    std::int64_t i = 1;
    while (up_degree(b) >= 1) {
        UPoly g = up_gcd(b, d);
        if (up_degree(g) >= 1) out.emplace_back(g, i);
        b = up_divexact(b, g.empty() ? UPoly{Rational(1)} : g);
        c = up_divexact(d, g.empty() ? UPoly{Rational(1)} : g);
        d = up_sub(c, up_derivative(b));
        ++i;
    }
    return out;
}

Rational up_resultant(UPoly a, UPoly b)
{
    a = up_trim(std::move(a));
    b = up_trim(std::move(b));
    if (a.empty() || b.empty()) return 0;
    Rational res = 1;
    bool flip = false;
    while (true) {
        if (up_degree(b) == 0) {
            Rational r = 1;
            for (std::int64_t i = 0; i < up_degree(a); ++i) r *= b[0];
            res *= r;
            break;
        }
        UPoly q, r;
        up_divmod(a, b, q, r);
        if (r.empty()) return 0;
        const std::int64_t da = up_degree(a), db = up_degree(b), dr = up_degree(r);
        if ((da % 2) && (db % 2)) flip = !flip;
        Rational lb = b.back();
        Rational pw = 1;
        for (std::int64_t i = 0; i < da - dr; ++i) pw *= lb;
        res *= pw;
        a = std::move(b);
        b = std::move(r);
    }
    return flip ? -res : res;
}

// ---------------------------------------------------------------------------

CPoly cp_trim(CPoly p, double zero_eps)
{
    while (!p.empty()) {
        const Coeff& c = p.back();
        const bool z = (zero_eps > 0 && !c.exact()) ? (c.abs() <= zero_eps) : c.negligible();
        if (!z) break;
        p.pop_back();
    }
    return p;
}

CPoly cp_derivative(const CPoly& p)
{
    if (p.size() <= 1) return {};
    CPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Coeff(Rational(i));
    return r;
}

Coeff cp_eval(const CPoly& p, const Coeff& x)
{
    Coeff acc = Coeff(Rational(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

double cp_max_abs(const CPoly& p)
{
    double m = 0;
    for (const auto& c : p) m = std::max(m, c.abs());
    return m;
}

/// Durand-Kerner simultaneous iteration on a (numerically) squarefree
/// polynomial, deterministic initial configuration, followed by a few
/// Newton polishing steps. Returns roots in no particular order.
std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>>& c,
                                                double tol, int iter_cap)
{
    const std::size_t n = c.size() - 1; // degree
    const std::complex<double> lead = c.back();
    std::vector<std::complex<double>> a(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) a[i] = c[i] / lead;

    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
    radius = 1.0 + radius;

    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + a[i];
        return acc;
    };

    std::vector<std::complex<double>> z(n);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = seed;
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = radius * w / std::abs(w);
        w *= seed * std::complex<double>(1.0, 0.13); // spread the angles
    }

    for (int it = 0; it < iter_cap; ++it) {
        double moved = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (denom == std::complex<double>(0.0, 0.0)) denom = 1e-30;
            const std::complex<double> dz = eval(z[i]) / denom;
            z[i] -= dz;
            moved = std::max(moved, std::abs(dz));
        }
        if (moved < tol * 0.5) break;
    }
    // Newton polish against the same normalized polynomial
    auto deval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (std::size_t i = c.size(); i-- > 1;) acc = acc * x + a[i] * double(i);
        return acc;
    };
    for (auto& r : z) {
        for (int s = 0; s < 4; ++s) {
            const auto d = deval(r);
            if (std::abs(d) < 1e-14) break;
            r -= eval(r) / d;
        }
    }
    return z;
}

void sort_roots(std::vector<RootMult>& roots)
{
    auto key = [](const Coeff& c) {
        const auto z = c.approx();
        return std::pair<long long, long long>(std::llround(z.real() * 1e9),
                                               std::llround(z.imag() * 1e9));
    };
    std::stable_sort(roots.begin(), roots.end(), [&](const RootMult& a, const RootMult& b) {
        return key(a.root) < key(b.root);
    });
}

/// Numeric roots of a squarefree factor with exact rational coefficients;
/// each root is snapped and re-verified exactly when possible.
std::vector<Coeff> solve_squarefree_exact(const UPoly& f, double tol)
{
    std::vector<std::complex<double>> cf;
    cf.reserve(f.size());
    for (const auto& q : f) cf.emplace_back(to_double(q), 0.0);

    // degree-1 shortcut is exact outright
    if (f.size() == 2) return {Coeff(-f[0] / f[1])};

    auto zs = durand_kerner(cf, tol, 200);
    double maxc = 0;
    for (const auto& q : f) maxc = std::max(maxc, std::abs(to_double(q)));
    std::vector<Coeff> out;
    for (auto z : zs) {
        Coeff c(z);
        if (auto snap = c.snapped(1e-10)) {
            // exact re-verification by substitution
            Coeff val = Coeff(Rational(0));
            for (auto it = f.rbegin(); it != f.rend(); ++it) val = val * (*snap) + Coeff(*it);
            if (val.is_zero()) c = *snap;
        }
        const double resid = std::abs(
            [&] {
                std::complex<double> acc = 0;
                for (auto it = cf.rbegin(); it != cf.rend(); ++it) acc = acc * z + *it;
                return acc;
            }());
        if (resid > tol * (1.0 + maxc) * 1e3)
            throw truncation_error("complex_roots: iteration did not converge");
        out.push_back(c);
    }
    return out;
}

} // namespace

std::vector<RootMult> complex_roots(const UPoly& coeffs, double tol)
{
    UPoly p = up_trim(coeffs);
    if (up_degree(p) < 1) throw precondition_error("complex_roots: degree must be >= 1");
    std::vector<RootMult> out;
    for (const auto& [f, mult] : up_squarefree_decomposition(p)) {
        for (auto& root : solve_squarefree_exact(f, tol)) out.push_back({root, mult});
    }
    sort_roots(out);
    std::int64_t total = 0;
    for (const auto& r : out) total += r.multiplicity;
    if (total != up_degree(p))
        throw truncation_error("complex_roots: multiplicity bookkeeping failed");
    return out;
}

std::vector<RootMult> complex_roots(const CPoly& coeffs, double tol)
{
    // exact-rational fast path
    bool all_rational = true;
    for (const auto& c : coeffs)
        if (!c.is_exact_real()) { all_rational = false; break; }
    if (all_rational) {
        UPoly p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) p[i] = coeffs[i].exact_re();
        return complex_roots(p, tol);
    }

    double scale = cp_max_abs(coeffs);
    CPoly p = cp_trim(coeffs);
    if (static_cast<std::int64_t>(p.size()) - 1 < 1)
        throw precondition_error("complex_roots: degree must be >= 1");

    std::vector<std::complex<double>> cf;
    for (const auto& c : p) cf.push_back(c.approx());
    auto zs = durand_kerner(cf, tol, 200);

    // cluster near-coincident roots into multiplicities
    std::sort(zs.begin(), zs.end(), [](auto a, auto b) {
        return std::make_pair(a.real(), a.imag()) < std::make_pair(b.real(), b.imag());
    });
    const double cluster_eps = 1e-7 * (1.0 + scale);
    std::vector<RootMult> out;
    for (std::size_t i = 0; i < zs.size();) {
        std::size_t j = i + 1;
        std::complex<double> sum = zs[i];
        while (j < zs.size() && std::abs(zs[j] - zs[i]) < cluster_eps) {
            sum += zs[j];
            ++j;
        }
        Coeff c(sum / double(j - i));
        if (auto snap = c.snapped(1e-10)) {
            Coeff val = cp_eval(p, *snap);
            if (val.exact() ? val.is_zero() : val.abs() <= tol * (1.0 + scale)) c = *snap;
        }
        const std::int64_t mult = static_cast<std::int64_t>(j - i);
        const double resid = cp_eval(p, c).abs();
        const double cap = (mult == 1 ? tol * 1e3 : 1e-6) * (1.0 + scale);
        if (resid > cap)
            throw truncation_error("complex_roots: iteration did not converge (residual "
                                   + std::to_string(resid) + ")");
        out.push_back({c, mult});
        i = j;
    }
    sort_roots(out);
    return out;
}

} // namespace milnor
