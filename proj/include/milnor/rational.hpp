#ifndef MILNOR_RATIONAL_HPP
#define MILNOR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace milnor {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

/// "49/50" for proper fractions, plain integer string otherwise.
inline std::string to_string(const Rational& q)
{
    if (is_integer(q))
        return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Integer int_gcd(Integer a, Integer b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

/// Continued-fraction reconstruction of a nearby rational.
///
/// Accepts the first convergent p/q with |x - p/q| <= tol * max(1, |x|)
/// and q <= max_den. Returns nothing when no small-denominator rational
/// sits inside the tolerance band, so values like 2*sqrt(3)/3 fall through.
inline std::optional<Rational> rational_snap(double x, double tol = 1e-10,
                                             std::int64_t max_den = 1'000'000)
{
    if (!std::isfinite(x)) return std::nullopt;
    const double scale = std::max(1.0, std::abs(x));
    // convergents via the Euclidean walk on x
    double a = x;
    Integer p0 = 1, q0 = 0;      // p_{-1}/q_{-1}
    Integer p1 = 0, q1 = 1;      // shifted so loop below starts clean
    std::swap(p0, p1);
    std::swap(q0, q1);
    // p0/q0 = 0/1, p1/q1 = 1/0 convention
    p0 = 0; q0 = 1; p1 = 1; q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const double fl = std::floor(a);
        if (fl > 9.2e18 || fl < -9.2e18) break;
        const auto ai = Integer(static_cast<long long>(fl));
        Integer p = ai * p1 + p0;
        Integer q = ai * q1 + q0;
        if (q > max_den) break;
        if (q != 0) {
            const Rational cand(p, q);
            if (std::abs(to_double(cand) - x) <= tol * scale) return cand;
        }
        p0 = p1; q0 = q1; p1 = p; q1 = q;
        const double frac = a - fl;
        if (frac < 1e-17) break;
        a = 1.0 / frac;
    }
    return std::nullopt;
}

/// Error in the input text handed to a parser (position-annotated).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    explicit parse_error(const std::string& msg) : std::runtime_error(msg), pos_(0) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// A documented precondition of an operation does not hold for the input.
class precondition_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested answer would depend on data beyond the reliable
/// truncation of a series, or an iteration failed to converge.
class truncation_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace milnor

#endif
