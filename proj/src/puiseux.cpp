#include "milnor/puiseux.hpp"

#include "milnor/bipoly.hpp"
#include "milnor/polygon.hpp"
#include "milnor/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace milnor {

namespace {

constexpr int kDepthCap = 16;

// ---------------------------------------------------------------------------
// bivariate polynomial over Coeff, the working type of the expansion;
// float coefficients swept by the same zero floor as the series module

class CPoly2 {
public:
    using Key = std::pair<std::int64_t, std::int64_t>; // (x-exp, y-exp)

    CPoly2() = default;
    explicit CPoly2(const Polynomial& p)
    {
        for (const auto& [ev, c] : p.terms()) terms_[{ev[0], ev[1]}] = Coeff(c);
    }

    const std::map<Key, Coeff>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(std::int64_t a, std::int64_t b, const Coeff& c)
    {
        auto it = terms_.find({a, b});
        if (it == terms_.end())
            terms_[{a, b}] = c;
        else
            it->second += c;
    }

    void sweep()
    {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it = it->second.negligible() ? terms_.erase(it) : std::next(it);
        }
    }

    Coeff at(std::int64_t a, std::int64_t b) const
    {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Coeff(Rational(0)) : it->second;
    }

    bool vanishes_at_origin() const { return at(0, 0).is_zero(); }

    std::int64_t min_y() const
    {
        std::int64_t m = -1;
        for (const auto& [k, c] : terms_)
            if (m < 0 || k.second < m) m = k.second;
        return m;
    }

    CPoly2 shift_down_y(std::int64_t m) const
    {
        CPoly2 r;
        for (const auto& [k, c] : terms_) r.terms_[{k.first, k.second - m}] = c;
        return r;
    }

    CPoly2 derivative_y() const
    {
        CPoly2 r;
        for (const auto& [k, c] : terms_) {
            if (k.second == 0) continue;
            r.terms_[{k.first, k.second - 1}] = c * Coeff(Rational(k.second));
        }
        return r;
    }

    std::vector<LatticePoint> support() const
    {
        std::vector<LatticePoint> s;
        for (const auto& [k, c] : terms_) s.push_back({k.first, k.second});
        return s;
    }

    /// k(x^p, x^q (alpha + y)) / x^d, expanded
    CPoly2 substitute_edge(std::int64_t p, std::int64_t q, const Coeff& alpha,
                           std::int64_t d) const
    {
        CPoly2 r;
        for (const auto& [k, c] : terms_) {
            const std::int64_t a = k.first, b = k.second;
            const std::int64_t xs = p * a + q * b - d;
            // (alpha + y)^b expanded by the binomial theorem
            Coeff apow = Coeff(Rational(1)); // alpha^(b-j) built backwards
            std::vector<Coeff> pows(b + 1);
            for (std::int64_t j = b; j >= 0; --j) {
                pows[j] = apow;
                if (j > 0) apow = apow * alpha;
            }
            Integer binom = 1;
            for (std::int64_t j = 0; j <= b; ++j) {
                // binom = C(b, j)
                r.add(xs, j, c * pows[j] * Coeff(Rational(binom)));
                binom = binom * (b - j) / (j + 1);
            }
        }
        r.sweep();
        return r;
    }

    /// composition along x = t^e, y = Y(t)
    ComplexSeries compose(std::int64_t e, const ComplexSeries& Y) const
    {
        std::int64_t maxb = 0;
        for (const auto& [k, c] : terms_) maxb = std::max(maxb, k.second);
        std::vector<ComplexSeries> ypow;
        ypow.reserve(maxb + 1);
        ypow.push_back(ComplexSeries::one());
        for (std::int64_t j = 1; j <= maxb; ++j) ypow.push_back(ypow.back() * Y);

        ComplexSeries acc = ComplexSeries::zero();
        for (const auto& [k, c] : terms_)
            acc = acc + ypow[k.second].scaled(c).shifted(e * k.first);
        return acc;
    }

private:
    std::map<Key, Coeff> terms_;
};

/// Edge polynomial E(s) of a face of the CPoly2 polygon.
CPoly edge_poly(const CPoly2& k, const PolygonEdge& e)
{
    CPoly E(e.lattice_length + 1, Coeff(Rational(0)));
    for (std::int64_t j = 0; j <= e.lattice_length; ++j)
        E[j] = k.at(e.from[0] - j * e.q, e.from[1] + j * e.p);
    return E;
}

/// Try an exact rational p-th root of an exact real; numeric otherwise.
Coeff principal_root(const Coeff& beta, std::int64_t p)
{
    if (p == 1) return beta;
    const std::complex<double> z = std::pow(beta.approx(), 1.0 / double(p));
    Coeff num(z);
    if (beta.exact()) {
        if (auto snap = num.snapped(1e-10)) {
            Coeff check = Coeff(Rational(1));
            for (std::int64_t i = 0; i < p; ++i) check = check * (*snap);
            if (check == beta) return *snap;
        }
    }
    return num;
}

struct LocalBranch {
    std::int64_t e = 1;
    ComplexSeries y;
    // rooting data of the outermost level that produced this branch
    std::int64_t p = 1, q = 1;
    Coeff alpha;
    std::int64_t mult = 1;
    Coeff beta; // alpha^p, the edge-polynomial root
};

/// Newton lifting of the separated simple root y = 0 of k at the origin.
/// Returns the series with its honest reliability bound.
ComplexSeries hensel_lift(const CPoly2& k, std::int64_t work)
{
    const CPoly2 ky = k.derivative_y();
    ComplexSeries Y = ComplexSeries::zero(kTruncInf);
    for (std::int64_t guard = 0; guard <= work + 8; ++guard) {
        ComplexSeries R = k.compose(1, Y);
        if (R.is_zero_to_trunc()) {
            if (R.trunc() >= kTruncInf) return Y; // exact polynomial branch
            // reliability exhausted without a correction target
            ComplexSeries out = Y;
            return out.truncated(R.trunc());
        }
        ComplexSeries D = ky.compose(1, Y);
        if (D.is_zero_to_trunc())
            throw truncation_error("puiseux: derivative vanished during lifting");
        const std::int64_t rord = *R.order();
        const std::int64_t dord = *D.order();
        const std::int64_t j = rord - dord;
        if (j >= work) return Y.truncated(j); // converged past the horizon
        if (j <= (Y.order() ? *Y.order() : 0) && guard > 0 && j <= 0)
            throw truncation_error("puiseux: lifting made no progress");
        const Coeff c = -(R.leading() / D.leading());
        Y.set(j, Y.coefficient(j) + c);
    }
    throw truncation_error("puiseux: lifting exceeded the iteration budget");
}

std::vector<LocalBranch> expand_levels(CPoly2 k, std::int64_t work, int depth)
{
    if (depth > kDepthCap)
        throw truncation_error("puiseux: recursion deeper than " + std::to_string(kDepthCap) +
                               " (is the curve non-reduced?)");
    std::vector<LocalBranch> out;

    // exact termination: y^m | k means y = 0 is a branch of this level
    const std::int64_t my = k.min_y();
    if (my > 0) {
        LocalBranch lb;
        lb.e = 1;
        lb.y = ComplexSeries::zero(kTruncInf);
        out.push_back(std::move(lb));
        k = k.shift_down_y(my);
    }
    if (!k.vanishes_at_origin()) return out;

    const LatticePolygon poly = newton_polygon(k.support());
    for (const auto& edge : poly.edges) {
        const CPoly E = edge_poly(k, edge);
        for (const auto& rm : complex_roots(E)) {
            const Coeff alpha = principal_root(rm.root, edge.p);
            CPoly2 k1 = k.substitute_edge(edge.p, edge.q, alpha, edge.d);
            std::vector<LocalBranch> subs;
            if (rm.multiplicity == 1) {
                LocalBranch lb;
                lb.e = 1;
                lb.y = hensel_lift(k1, work);
                subs.push_back(std::move(lb));
            } else {
                subs = expand_levels(std::move(k1), work, depth + 1);
            }
            for (auto& sub : subs) {
                LocalBranch lifted;
                lifted.e = edge.p * sub.e;
                // y = t^{q e1} (alpha + S1(t))
                ComplexSeries inner =
                    ComplexSeries::monomial(alpha, 0) + sub.y;
                lifted.y = inner.shifted(edge.q * sub.e);
                lifted.p = edge.p;
                lifted.q = edge.q;
                lifted.alpha = alpha;
                lifted.beta = rm.root;
                lifted.mult = rm.multiplicity;
                out.push_back(std::move(lifted));
            }
        }
    }
    return out;
}

std::int64_t residual_certificate(const Polynomial& k, const ComplexSeries& xs,
                                  const ComplexSeries& ys)
{
    ComplexSeries r = compose_series(k, {xs, ys}, kTruncInf);
    if (auto o = r.order()) return *o;
    return r.trunc();
}

std::string describe_root(std::int64_t p, std::int64_t q, const Coeff& beta, std::int64_t mult)
{
    std::string s = "(y";
    if (p != 1) s += "^" + std::to_string(p);
    s += " - (" + beta.str() + ")x";
    if (q != 1) s += "^" + std::to_string(q);
    s += ")";
    if (mult != 1) s += "^" + std::to_string(mult);
    return s;
}

} // namespace

BranchesResult branches(const Polynomial& k, std::int64_t N)
{
    if (k.nvars() != 2) throw precondition_error("branches: needs two variables");
    if (k.is_zero()) throw precondition_error("branches: zero polynomial");
    if (k.has_constant_term()) throw precondition_error("branches: k(0) != 0");
    if (N < 4) throw precondition_error("branches: truncation must be at least 4");

    BranchesResult result;

    // split off coordinate-axis factors exactly
    const std::int64_t ax = k.min_exponent(0), ay = k.min_exponent(1);
    Polynomial kt = k;
    if (ax > 0) kt = kt.shift_down(0, ax);
    if (ay > 0) kt = kt.shift_down(1, ay);
    if (ax > 0) {
        PuiseuxBranch b;
        b.kind = PuiseuxBranch::Kind::axis_x;
        b.x = ComplexSeries::zero(kTruncInf);
        b.y = ComplexSeries::t_power(1);
        b.e = 0;
        b.exact = true;
        b.truncation = N;
        b.verified_order = kTruncInf;
        b.rooted_at = "x = 0 (axis factor x^" + std::to_string(ax) + ")";
        result.branches.push_back(std::move(b));
    }
    if (ay > 0) {
        PuiseuxBranch b;
        b.kind = PuiseuxBranch::Kind::axis_y;
        b.x = ComplexSeries::t_power(1);
        b.y = ComplexSeries::zero(kTruncInf);
        b.e = 1;
        b.exact = true;
        b.truncation = N;
        b.verified_order = kTruncInf;
        b.rooted_at = "y = 0 (axis factor y^" + std::to_string(ay) + ")";
        result.branches.push_back(std::move(b));
    }

    if (!kt.has_constant_term() && !kt.is_zero()) {
        // strip repeated factors; the branch set is unchanged
        const Polynomial kred = squarefree_germ(kt);
        result.reduced = kred.total_degree() != kt.total_degree();
        const Polynomial& work_poly = result.reduced ? kred : kt;

        std::int64_t work = N + 4;
        for (int attempt = 0;; ++attempt) {
            std::vector<PuiseuxBranch> got;
            bool enough = true;
            for (auto& lb : expand_levels(CPoly2(work_poly), work, 0)) {
                PuiseuxBranch b;
                b.kind = PuiseuxBranch::Kind::regular;
                b.p = lb.p;
                b.q = lb.q;
                b.alpha = lb.alpha;
                b.mult = lb.mult;
                b.e = lb.e;
                b.ramification = lb.e / lb.p;
                b.x = ComplexSeries::t_power(lb.e);
                b.y = lb.y;
                b.truncation = N;
                b.rooted_at = describe_root(lb.p, lb.q, lb.beta, lb.mult);
                // rational reconstruction for branches that went numeric
                if (!b.y.all_exact() || !b.alpha.exact()) {
                    bool snappable = b.alpha.exact() || b.alpha.snapped(1e-10).has_value();
                    ComplexSeries ysnap(b.y.trunc());
                    for (const auto& [kk, c] : b.y.coefficients()) {
                        auto s = c.snapped(1e-10);
                        if (!s) { snappable = false; break; }
                        ysnap.set(kk, *s);
                    }
                    if (snappable) {
                        const std::int64_t cert = residual_certificate(k, b.x, ysnap);
                        if (cert >= N) b.y = ysnap; // exact re-verification passed
                    }
                }
                b.exact = b.y.all_exact();
                b.verified_order = residual_certificate(k, b.x, b.y);
                if (b.verified_order < N) {
                    if (b.y.is_zero_to_trunc() || !b.y.order() ||
                        b.verified_order >= b.y.trunc()) {
                        enough = false; // reliability ran out before N
                    } else {
                        enough = false; // genuine failure would be a bug; retry deeper
                    }
                }
                got.push_back(std::move(b));
            }
            if (enough) {
                for (auto& b : got) result.branches.push_back(std::move(b));
                break;
            }
            if (attempt >= 3)
                throw truncation_error("branches: could not certify residual order " +
                                       std::to_string(N) + " (deepest attempt " +
                                       std::to_string(work) + " terms)");
            work = work * 2 + 8;
        }
    }
    return result;
}

std::int64_t verify_branch(const Polynomial& k, const PuiseuxBranch& b)
{
    if (b.truncation < 4) throw precondition_error("verify_branch: truncation must be >= 4");
    return residual_certificate(k, b.x, b.y);
}

} // namespace milnor
