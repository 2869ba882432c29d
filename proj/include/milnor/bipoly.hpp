#ifndef MILNOR_BIPOLY_HPP
#define MILNOR_BIPOLY_HPP

#include "milnor/poly.hpp"
#include "milnor/upoly.hpp"

namespace milnor {

/// Exact division a / b in Q[x1..xn]; throws when not exactly divisible.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Gcd in Q[x,y] (content/primitive-part pseudo-remainder sequence),
/// normalized so the graded-lex leading coefficient is 1.
Polynomial bipoly_gcd(const Polynomial& a, const Polynomial& b);

/// Resultant of a and b with respect to the given variable index,
/// as a univariate polynomial in the other variable (n = 2 only).
UPoly bipoly_resultant(const Polynomial& a, const Polynomial& b, std::size_t var_index);

/// Strip repeated factors that matter for the germ at the origin:
/// returns k / gcd(k, dk/dy), which keeps each y-involving irreducible
/// factor exactly once and drops factors that are units at the origin.
/// Intended for inputs with no x^a y^b monomial factor.
Polynomial squarefree_germ(const Polynomial& k);

/// True when f and g share a common factor vanishing at the origin.
bool has_common_germ_factor(const Polynomial& f, const Polynomial& g);

} // namespace milnor

#endif
