#ifndef MILNOR_ZETA_HPP
#define MILNOR_ZETA_HPP

#include "milnor/newton.hpp"
#include "milnor/poly.hpp"

#include <string>
#include <vector>

namespace milnor {

/// Sign convention tag carried by every zeta report: the axis (corner)
/// factors enter with exponent +1 and the edge factors with exponent
/// -l_j, which is what makes mu = -deg zeta + 1 come out right.
inline constexpr const char* kZetaConvention = "corner-positive-edge-negative";

/// A monodromy zeta function as a finite product prod (1 - tau^d)^e.
class ZetaFactored {
public:
    ZetaFactored() = default;

    void add_factor(std::int64_t d, std::int64_t e);
    /// merge equal d, drop zero exponents, sort by d
    void normalize();

    const std::vector<std::pair<std::int64_t, std::int64_t>>& factors() const { return factors_; }
    std::int64_t degree() const; // sum d*e
    bool is_one() const { return factors_.empty(); }

    std::string str() const; // "(1-t^2)(1-t^6)^-1"

    friend bool operator==(const ZetaFactored& a, const ZetaFactored& b)
    {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<std::pair<std::int64_t, std::int64_t>> factors_;
};

/// A'Campo zeta function of a convenient non-degenerate plane-curve germ:
/// (1-tau^{a_x})(1-tau^{a_y}) prod_j (1-tau^{d(R_j;f)})^{-l_j}.
ZetaFactored zeta_plane(const Polynomial& f);

/// Zeta of the product germ h = f g over the union subdivision:
/// (1-tau^{a_x+b_x})(1-tau^{a_y+b_y}) prod_j (1-tau^{d_f+d_g})^{-(l_j+m_j)}.
ZetaFactored zeta_plane_product(const Polynomial& f, const Polynomial& g);

/// Zeta of the mixed germ H = f conj(g); requires the Newton multiplicity
/// condition (throws precondition_error with the witness otherwise).
ZetaFactored zeta_mixed_plane(const Polynomial& f, const Polynomial& g);

std::int64_t milnor_from_zeta(const ZetaFactored& z);

struct Zeta3hResult {
    ZetaFactored zeta;
    std::int64_t polar_degree = 0; // |d_f - d_g|
    std::int64_t chi_Eprime = 0;
    std::vector<std::string> warnings; // numeric sanity findings, never fatal
};

/// Homogeneous 3-variable blow-up case: f, g homogeneous of distinct
/// degrees, projective curves smooth and transverse (documented
/// precondition, spot-checked via exact discriminants on a deterministic
/// random chart; failures are warnings, not proof).
Zeta3hResult zeta_mixed_homog3(const Polynomial& f, const Polynomial& g,
                               bool sanity_check = true);

} // namespace milnor

#endif
