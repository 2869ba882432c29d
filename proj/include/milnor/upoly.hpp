#ifndef MILNOR_UPOLY_HPP
#define MILNOR_UPOLY_HPP

#include "milnor/coeff.hpp"
#include "milnor/rational.hpp"

#include <vector>

namespace milnor {

/// Dense univariate polynomial over Q, coefficients by ascending degree.
/// The zero polynomial is the empty vector; otherwise the back is nonzero.
using UPoly = std::vector<Rational>;

UPoly up_trim(UPoly p);
inline bool up_is_zero(const UPoly& p) { return p.empty(); }
inline std::int64_t up_degree(const UPoly& p) { return static_cast<std::int64_t>(p.size()) - 1; }

UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
UPoly up_scale(const UPoly& a, const Rational& c);
UPoly up_derivative(const UPoly& p);
Rational up_eval(const UPoly& p, const Rational& x);

/// Quotient and remainder over the field Q.
void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
/// Exact division; throws when the remainder is nonzero.
UPoly up_divexact(const UPoly& a, const UPoly& b);

/// Monic gcd over Q (gcd(0,0) = 0).
UPoly up_gcd(UPoly a, UPoly b);

/// p / gcd(p, p'); second member of the pair is its degree
/// (= number of distinct complex roots).
std::pair<UPoly, std::int64_t> up_squarefree_part(const UPoly& p);

/// Yun's squarefree decomposition: p = lc * prod f_i^i with f_i monic
/// squarefree and pairwise coprime. Entries are (f_i, i), f_i nonconstant.
std::vector<std::pair<UPoly, std::int64_t>> up_squarefree_decomposition(const UPoly& p);

/// Resultant of a and b over Q (subresultant-free Euclidean form).
Rational up_resultant(UPoly a, UPoly b);

// ---------------------------------------------------------------------------
// complex-coefficient variant (used below the exact-rational fast path)

using CPoly = std::vector<Coeff>;

CPoly cp_trim(CPoly p, double zero_eps = 0.0);
CPoly cp_derivative(const CPoly& p);
Coeff cp_eval(const CPoly& p, const Coeff& x);

struct RootMult {
    Coeff root;
    std::int64_t multiplicity;
};

/// All complex roots with multiplicities.
///
/// Rational-coefficient input goes through exact squarefree decomposition
/// first; every numeric root is then snapped to a Gaussian rational and
/// kept exact when re-substitution verifies it exactly. Inexact input is
/// solved numerically and clustered. Deterministic order: lexicographic by
/// (re, im) rounded to 1e-9.
std::vector<RootMult> complex_roots(const CPoly& coeffs, double tol = 1e-12);
std::vector<RootMult> complex_roots(const UPoly& coeffs, double tol = 1e-12);

} // namespace milnor

#endif
