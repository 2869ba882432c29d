#ifndef MILNOR_PUISEUX_HPP
#define MILNOR_PUISEUX_HPP

#include "milnor/poly.hpp"
#include "milnor/series.hpp"

#include <string>
#include <vector>

namespace milnor {

/// A truncated local branch x = t^e, y = sum c_i t^i of a plane-curve germ.
///
/// Coordinate-axis branches are carried in the same shape: the branch
/// x = 0 has x-series 0 and y-series t (and symmetrically for y = 0).
struct PuiseuxBranch {
    enum class Kind { regular, axis_x, axis_y }; // axis_x is the branch x = 0
    Kind kind = Kind::regular;

    std::int64_t p = 1, q = 1;     // rooting edge normal P = (p, q)
    Coeff alpha;                   // rooting root (alpha^p is a root of E)
    std::int64_t mult = 1;         // multiplicity of the rooted factor
    std::int64_t ramification = 1; // r, so that e = p * r
    std::int64_t e = 1;            // ord_t x(t)

    ComplexSeries x;               // t^e (exact), or 0 for the x-axis branch
    ComplexSeries y;               // y(t)

    std::int64_t truncation = 0;     // requested residual order N
    std::int64_t verified_order = 0; // certified ord_t k(x(t), y(t)); kTruncInf = exact
    bool exact = false;              // every coefficient is exact
    std::string rooted_at;           // "(y^p - beta x^q)^mu" description
};

struct BranchesResult {
    std::vector<PuiseuxBranch> branches; // axis branches first, then by edge/root order
    bool reduced = false;                // input had repeated factors, stripped for expansion
};

/// All local branch germs of k = 0 at the origin, each verified by
/// substitution to order >= N. Coordinate-axis branches are exact.
BranchesResult branches(const Polynomial& k, std::int64_t N);

/// Residual order certificate: the order to which k vanishes along the
/// branch (first nonzero exponent of the composition, or the reliable
/// truncation when it vanishes throughout; kTruncInf for exact zero).
std::int64_t verify_branch(const Polynomial& k, const PuiseuxBranch& b);

} // namespace milnor

#endif
