#ifndef MILNOR_SERIES_HPP
#define MILNOR_SERIES_HPP

#include "milnor/coeff.hpp"
#include "milnor/poly.hpp"

#include <limits>
#include <map>
#include <optional>
#include <vector>

namespace milnor {

/// Truncation sentinel for series that are exact (finite Laurent polynomials
/// known completely, e.g. the cusp branch x = t^2, y = t^3).
constexpr std::int64_t kTruncInf = std::numeric_limits<std::int64_t>::max() / 4;

/// Truncated Laurent series over Coeff.
///
/// Coefficients at exponents >= trunc() are unknown; stored coefficients
/// are nonzero. Every arithmetic operation propagates the reliable
/// truncation bound, so an answer that would depend on unknown
/// coefficients is detectable rather than silently wrong.
///
/// Floating-point coefficients arising from cancellation are swept by a
/// zero floor of 1e-10 * max(1, scale) at normalization time; exact
/// coefficients are only dropped when exactly zero.
class ComplexSeries {
public:
    ComplexSeries() : trunc_(kTruncInf) {}
    explicit ComplexSeries(std::int64_t trunc) : trunc_(std::min(trunc, kTruncInf)) {}

    static ComplexSeries zero(std::int64_t trunc = kTruncInf) { return ComplexSeries(trunc); }
    /// c * t^k
    static ComplexSeries monomial(const Coeff& c, std::int64_t k, std::int64_t trunc = kTruncInf);
    static ComplexSeries one() { return monomial(Coeff(Rational(1)), 0); }
    /// t^k
    static ComplexSeries t_power(std::int64_t k) { return monomial(Coeff(Rational(1)), k); }

    std::int64_t trunc() const { return trunc_; }
    bool is_exact_polynomial() const;
    /// True when no coefficient below trunc() is nonzero.
    bool is_zero_to_trunc() const { return coeffs_.empty(); }

    /// Order of the series (first nonzero exponent); nothing when the
    /// series is zero up to its truncation.
    std::optional<std::int64_t> order() const;
    Coeff leading() const;
    Coeff coefficient(std::int64_t k) const;
    const std::map<std::int64_t, Coeff>& coefficients() const { return coeffs_; }

    void set(std::int64_t k, const Coeff& c);
    ComplexSeries truncated(std::int64_t new_trunc) const;
    ComplexSeries shifted(std::int64_t k) const; // multiply by t^k

    friend ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b);
    friend ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b);
    friend ComplexSeries operator*(const ComplexSeries& a, const ComplexSeries& b);
    ComplexSeries operator-() const;
    ComplexSeries scaled(const Coeff& c) const;

    /// Multiplicative inverse computed out to `horizon` (bounded by the
    /// reliability limit trunc - 2*order). Throws on a series that is zero
    /// to its truncation.
    ComplexSeries inverse(std::int64_t horizon) const;

    /// Largest exponent e such that all coefficients at exponents < e
    /// vanish; equals trunc() when zero-to-trunc.
    std::int64_t vanish_order() const;

    std::complex<double> evaluate(std::complex<double> t) const;
    bool all_exact() const;

    std::string str(const std::string& var = "t") const;

    void normalize();

private:
    std::int64_t trunc_;
    std::map<std::int64_t, Coeff> coeffs_;
};

/// Truncated series of the polynomial p along per-variable series
/// (exact in the inputs' coefficients up to the propagated reliability,
/// clipped at the work horizon N for inexactly-truncated inputs).
ComplexSeries compose_series(const Polynomial& p, const std::vector<ComplexSeries>& branch,
                             std::int64_t N);

/// Laurent ratio num/den computed out to horizon N.
ComplexSeries series_ratio(const ComplexSeries& num, const ComplexSeries& den, std::int64_t N);

} // namespace milnor

#endif
