#include "milnor/series.hpp"

#include <algorithm>
#include <sstream>

namespace milnor {

namespace {
std::int64_t clamp_trunc(std::int64_t t) { return std::min(t, kTruncInf); }

std::int64_t add_trunc(std::int64_t t, std::int64_t k)
{
    if (t >= kTruncInf) return kTruncInf;
    return clamp_trunc(t + k);
}
} // namespace

ComplexSeries ComplexSeries::monomial(const Coeff& c, std::int64_t k, std::int64_t trunc)
{
    ComplexSeries s(trunc);
    if (!c.is_zero() && k < s.trunc_) s.coeffs_[k] = c;
    return s;
}

bool ComplexSeries::is_exact_polynomial() const
{
    if (trunc_ < kTruncInf) return false;
    for (const auto& [k, c] : coeffs_)
        if (!c.exact()) return false;
    return true;
}

std::optional<std::int64_t> ComplexSeries::order() const
{
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

Coeff ComplexSeries::leading() const
{
    if (coeffs_.empty()) return Coeff(Rational(0));
    return coeffs_.begin()->second;
}

Coeff ComplexSeries::coefficient(std::int64_t k) const
{
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Coeff(Rational(0)) : it->second;
}

void ComplexSeries::set(std::int64_t k, const Coeff& c)
{
    if (k >= trunc_) return;
    if (c.is_zero())
        coeffs_.erase(k);
    else
        coeffs_[k] = c;
}

ComplexSeries ComplexSeries::truncated(std::int64_t new_trunc) const
{
    ComplexSeries r(std::min(trunc_, new_trunc));
    for (const auto& [k, c] : coeffs_)
        if (k < r.trunc_) r.coeffs_[k] = c;
    return r;
}

ComplexSeries ComplexSeries::shifted(std::int64_t k) const
{
    ComplexSeries r(add_trunc(trunc_, k));
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

void ComplexSeries::normalize()
{
    // cancellation junk is recognized through the per-value error bounds,
    // not a flat epsilon; see Coeff::negligible
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.negligible() || it->first >= trunc_)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b)
{
    ComplexSeries r(std::min(a.trunc_, b.trunc_));
    for (const auto& [k, c] : a.coeffs_)
        if (k < r.trunc_) r.coeffs_[k] = c;
    for (const auto& [k, c] : b.coeffs_) {
        if (k >= r.trunc_) continue;
        auto it = r.coeffs_.find(k);
        if (it == r.coeffs_.end())
            r.coeffs_[k] = c;
        else
            it->second += c;
    }
    r.normalize();
    return r;
}

ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b)
{
    return a + (-b);
}

ComplexSeries ComplexSeries::operator-() const
{
    ComplexSeries r(trunc_);
    for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
    return r;
}

ComplexSeries ComplexSeries::scaled(const Coeff& c) const
{
    ComplexSeries r(trunc_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : coeffs_) r.coeffs_[k] = v * c;
    r.normalize();
    return r;
}

ComplexSeries operator*(const ComplexSeries& a, const ComplexSeries& b)
{
    // reliability: coefficients of the product are reliable strictly below
    // min(trunc_a + ord_b, trunc_b + ord_a); a factor that is zero to its
    // truncation contributes its truncation as the effective order
    const std::int64_t ord_a = a.coeffs_.empty() ? a.trunc_ : a.coeffs_.begin()->first;
    const std::int64_t ord_b = b.coeffs_.empty() ? b.trunc_ : b.coeffs_.begin()->first;
    const std::int64_t t = std::min(add_trunc(a.trunc_, ord_b), add_trunc(b.trunc_, ord_a));
    ComplexSeries r(t);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            const std::int64_t k = ka + kb;
            if (k >= t) continue;
            auto it = r.coeffs_.find(k);
            if (it == r.coeffs_.end())
                r.coeffs_[k] = ca * cb;
            else
                it->second += ca * cb;
        }
    }
    r.normalize();
    return r;
}

ComplexSeries ComplexSeries::inverse(std::int64_t horizon) const
{
    if (coeffs_.empty())
        throw precondition_error("series inverse: denominator is zero to its truncation");
    const std::int64_t o = coeffs_.begin()->first;
    const Coeff lead = coeffs_.begin()->second;
    // u = (self / (lead t^o)) - 1 has positive order and reliability trunc - o
    const std::int64_t rel = add_trunc(trunc_, -o); // reliability of the unit part
    const std::int64_t work = std::min(rel, horizon);
    if (work > 1'000'000)
        throw precondition_error("series inverse: unbounded horizon requested");
    ComplexSeries unit(work);
    for (const auto& [k, c] : coeffs_) {
        const std::int64_t e = k - o;
        if (e < work) unit.coeffs_[e] = c / lead;
    }
    // invert the unit part by coefficient recursion b0=1, bk = -sum a_j b_{k-j}
    ComplexSeries inv(work);
    inv.coeffs_[0] = Coeff(Rational(1));
    for (std::int64_t k = 1; k < work && k < kTruncInf; ++k) {
        Coeff acc = Coeff(Rational(0));
        for (const auto& [j, aj] : unit.coeffs_) {
            if (j <= 0 || j > k) continue;
            auto it = inv.coeffs_.find(k - j);
            if (it != inv.coeffs_.end()) acc += aj * it->second;
        }
        if (!acc.is_zero()) inv.coeffs_[k] = -acc;
        if (unit.coeffs_.empty()) break;
    }
    inv.normalize();
    // result = inv(unit) / lead shifted by -o; reliability shifts by -o too
    ComplexSeries r(add_trunc(inv.trunc_, -o));
    for (const auto& [k, c] : inv.coeffs_) r.coeffs_[k - o] = c / lead;
    r.normalize();
    return r;
}

std::int64_t ComplexSeries::vanish_order() const
{
    if (coeffs_.empty()) return trunc_;
    return coeffs_.begin()->first;
}

std::complex<double> ComplexSeries::evaluate(std::complex<double> t) const
{
    // Laurent-safe evaluation; exponents may be negative
    auto ipow = [](std::complex<double> b, std::int64_t e) {
        const bool neg = e < 0;
        if (neg) e = -e;
        std::complex<double> r = 1.0;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return neg ? 1.0 / r : r;
    };
    std::complex<double> acc = 0;
    for (const auto& [k, c] : coeffs_) acc += c.approx() * ipow(t, k);
    return acc;
}

bool ComplexSeries::all_exact() const
{
    for (const auto& [k, c] : coeffs_)
        if (!c.exact()) return false;
    return true;
}

std::string ComplexSeries::str(const std::string& var) const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        if (k != 0) out << var << "^" << k;
    }
    if (first) out << "0";
    if (trunc_ < kTruncInf) out << " + O(" << var << "^" << trunc_ << ")";
    return out.str();
}

ComplexSeries compose_series(const Polynomial& p, const std::vector<ComplexSeries>& branch,
                             std::int64_t N)
{
    if (p.is_zero()) throw precondition_error("compose_series: p must have at least one term");
    if (branch.size() != p.nvars())
        throw precondition_error("compose_series: branch length mismatch");

    // clip inexactly-known inputs to the work horizon; exact polynomial
    // inputs stay exact so polynomial identities survive composition
    std::vector<ComplexSeries> in;
    in.reserve(branch.size());
    for (const auto& s : branch)
        in.push_back(s.trunc() >= kTruncInf ? s : s.truncated(N));

    // power tables per variable, built incrementally up to the max exponent
    std::vector<std::vector<ComplexSeries>> powers(in.size());
    for (std::size_t vi = 0; vi < in.size(); ++vi) {
        std::int64_t maxe = 0;
        for (const auto& [ev, c] : p.terms()) maxe = std::max(maxe, ev[vi]);
        powers[vi].reserve(maxe + 1);
        powers[vi].push_back(ComplexSeries::one());
        for (std::int64_t e = 1; e <= maxe; ++e)
            powers[vi].push_back(powers[vi].back() * in[vi]);
    }

    ComplexSeries acc = ComplexSeries::zero();
    for (const auto& [ev, c] : p.terms()) {
        ComplexSeries term = ComplexSeries::monomial(Coeff(c), 0);
        for (std::size_t vi = 0; vi < ev.size(); ++vi)
            if (ev[vi] > 0) term = term * powers[vi][ev[vi]];
        acc = acc + term;
    }
    return acc;
}

ComplexSeries series_ratio(const ComplexSeries& num, const ComplexSeries& den, std::int64_t N)
{
    if (den.is_zero_to_trunc())
        throw precondition_error("series_ratio: denominator identically zero to truncation");
    const std::int64_t od = den.order().value();
    // the inverse must be reliable below N - ord(num) for the product to be
    // reliable below N; inverse() wants the bound on its unit part
    const std::int64_t on = num.order().value_or(num.trunc());
    const std::int64_t hz = std::min<std::int64_t>(kTruncInf / 2, N - on + od + 1);
    ComplexSeries inv = den.inverse(std::max<std::int64_t>(hz, 1));
    return num * inv;
}

} // namespace milnor
