#ifndef MILNOR_COEFF_HPP
#define MILNOR_COEFF_HPP

#include "milnor/rational.hpp"

#include <cfloat>
#include <cmath>
#include <complex>

namespace milnor {

/// Complex scalar with an exact Gaussian-rational fast path.
///
/// A Coeff is exact while both parts are known rationals; any arithmetic
/// with an inexact operand demotes the result to double precision. The
/// double approximation is maintained either way.
///
/// Inexact values carry a first-order absolute error bound, propagated
/// through arithmetic. Series normalization uses it to tell cancellation
/// junk from genuine small coefficients: a flat epsilon cannot do that
/// once coefficients span many orders of magnitude.
class Coeff {
public:
    Coeff() : exact_(true), re_(0), im_(0), z_(0.0, 0.0), err_(0.0) {}
    Coeff(const Rational& re) : exact_(true), re_(re), im_(0), z_(to_double(re), 0.0), err_(0.0) {}
    Coeff(const Rational& re, const Rational& im)
        : exact_(true), re_(re), im_(im), z_(to_double(re), to_double(im)), err_(0.0) {}
    Coeff(std::complex<double> z) : exact_(false), re_(0), im_(0), z_(z), err_(default_err(z)) {}
    Coeff(double x) : exact_(false), re_(0), im_(0), z_(x, 0.0), err_(default_err(z_)) {}
    static Coeff from_int(long long v) { return Coeff(Rational(v)); }

    bool exact() const { return exact_; }
    const Rational& exact_re() const { return re_; }
    const Rational& exact_im() const { return im_; }
    std::complex<double> approx() const { return z_; }
    double abs() const { return std::abs(z_); }
    double error_bound() const { return exact_ ? 0.0 : err_; }

    bool is_zero() const
    {
        if (exact_) return re_ == 0 && im_ == 0;
        return z_ == std::complex<double>(0.0, 0.0);
    }
    /// Zero within the propagated error bound (always false on exact nonzero).
    bool negligible() const
    {
        if (exact_) return re_ == 0 && im_ == 0;
        return std::abs(z_) <= std::max(16.0 * err_, 1e-14);
    }
    bool is_exact_real() const { return exact_ && im_ == 0; }

    /// |c|^2 as a rational; only valid on the exact path.
    Rational abs2_exact() const { return re_ * re_ + im_ * im_; }

    Coeff conj() const
    {
        if (exact_) return Coeff(re_, -im_);
        return with_err(std::conj(z_), err_);
    }

    Coeff operator-() const
    {
        if (exact_) return Coeff(-re_, -im_);
        return with_err(-z_, err_);
    }

    friend Coeff operator+(const Coeff& a, const Coeff& b)
    {
        if (a.exact_ && b.exact_) return Coeff(a.re_ + b.re_, a.im_ + b.im_);
        const auto z = a.z_ + b.z_;
        return with_err(z, a.eff_err() + b.eff_err() + DBL_EPSILON * std::abs(z));
    }
    friend Coeff operator-(const Coeff& a, const Coeff& b)
    {
        if (a.exact_ && b.exact_) return Coeff(a.re_ - b.re_, a.im_ - b.im_);
        const auto z = a.z_ - b.z_;
        return with_err(z, a.eff_err() + b.eff_err() + DBL_EPSILON * std::abs(z));
    }
    friend Coeff operator*(const Coeff& a, const Coeff& b)
    {
        if (a.exact_ && b.exact_)
            return Coeff(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
        const auto z = a.z_ * b.z_;
        const double err = a.eff_err() * std::abs(b.z_) + b.eff_err() * std::abs(a.z_) +
                           a.eff_err() * b.eff_err() + DBL_EPSILON * std::abs(z);
        return with_err(z, err);
    }
    friend Coeff operator/(const Coeff& a, const Coeff& b)
    {
        if (a.exact_ && b.exact_) {
            const Rational n = b.re_ * b.re_ + b.im_ * b.im_;
            if (n == 0) throw precondition_error("division by exact zero");
            return Coeff((a.re_ * b.re_ + a.im_ * b.im_) / n,
                         (a.im_ * b.re_ - a.re_ * b.im_) / n);
        }
        const auto z = a.z_ / b.z_;
        const double babs = std::abs(b.z_);
        const double err =
            (a.eff_err() + std::abs(z) * b.eff_err()) / babs + DBL_EPSILON * std::abs(z);
        return with_err(z, err);
    }

    Coeff& operator+=(const Coeff& b) { *this = *this + b; return *this; }
    Coeff& operator-=(const Coeff& b) { *this = *this - b; return *this; }
    Coeff& operator*=(const Coeff& b) { *this = *this * b; return *this; }

    /// Exact equality; inexact values compare through their doubles.
    friend bool operator==(const Coeff& a, const Coeff& b)
    {
        if (a.exact_ && b.exact_) return a.re_ == b.re_ && a.im_ == b.im_;
        return a.z_ == b.z_;
    }

    /// Try to upgrade an inexact value to an exact Gaussian rational.
    /// The caller is responsible for re-verifying the snapped value.
    std::optional<Coeff> snapped(double tol = 1e-10) const
    {
        if (exact_) return *this;
        auto re = rational_snap(z_.real(), tol);
        auto im = rational_snap(z_.imag(), tol);
        if (!re || !im) return std::nullopt;
        return Coeff(*re, *im);
    }

    std::string str() const
    {
        if (exact_) {
            if (im_ == 0) return to_string(re_);
            return to_string(re_) + (im_ > 0 ? "+" : "") + to_string(im_) + "i";
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z_.real(), z_.imag());
        return buf;
    }

private:
    static double default_err(std::complex<double> z) { return 4.0 * DBL_EPSILON * std::abs(z); }
    static Coeff with_err(std::complex<double> z, double err)
    {
        Coeff c(z);
        c.err_ = err;
        return c;
    }
    /// exact operands contribute their double-representation error
    double eff_err() const { return exact_ ? DBL_EPSILON * std::abs(z_) : err_; }

    bool exact_;
    Rational re_, im_;
    std::complex<double> z_;
    double err_;
};

} // namespace milnor

#endif
