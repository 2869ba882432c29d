#ifndef MILNOR_CRITLOC_HPP
#define MILNOR_CRITLOC_HPP

#include "milnor/newton.hpp"
#include "milnor/puiseux.hpp"
#include "milnor/series.hpp"
#include "milnor/zeta.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace milnor {

/// J(f,g) = f_x g_y - f_y g_x, exact.
Polynomial jacobian(const Polynomial& f, const Polynomial& g);

/// A face of Gamma(J) classified against the pair (f, g).
struct FaceClass {
    WeightVector normal;
    enum class Kind { first_type, hidden } kind = Kind::first_type;
    bool is_edge = true; // edge of the polygon vs vertex (representative normal)
    std::int64_t d_J = 0, d_f = 0, d_g = 0;
};

/// Label every compact face of Gamma(J). The polynomial-identity test
/// J_P == J(f_P, g_P) and the degree test d(P;J) == d(P;f)+d(P;g)-(p+q)
/// are both computed and must agree (throws on mismatch).
std::vector<FaceClass> classify_faces(const Polynomial& J, const Polynomial& f,
                                      const Polynomial& g);

enum class BranchVerdict {
    critical_curve_constant_modulus,
    critical_curve_2k_rays,
    no_critical_curve,
    in_zero_set, // branch lies in V(H); the limit test does not apply
    undecided,
};

std::string to_string(BranchVerdict v);

struct BranchReport {
    PuiseuxBranch branch;
    bool in_Vf = false, in_Vg = false;
    bool in_VH() const { return in_Vf || in_Vg; }

    std::optional<bool> non_tangential;            // nullopt: not applicable/undetermined
    std::optional<FaceClass::Kind> face_kind;      // of the rooting face of Gamma(J)
    std::optional<std::int64_t> df, dg;            // weighted degrees at the rooting face

    char sigma_var = 'x';                          // the j with g_{z_j} not identically 0
    std::optional<std::int64_t> sigma_order;       // ord of sigma; nullopt if only a lower bound
    std::int64_t sigma_order_lower_bound = 0;      // used when order itself is out of reach
    Coeff sigma0;                                  // leading coefficient when sigma_order == 0
    double sigma0_modulus = 0.0;
    bool sigma0_exact = false;
    ComplexSeries sigma;                           // the ratio series (when computed)
    std::optional<std::int64_t> contact_k;         // ord(sigma - sigma0) when unit modulus

    BranchVerdict verdict = BranchVerdict::undecided;
    std::string instrument; // which test decided
    std::string note;       // margins and caveats
};

/// Critical-curve test along one Jacobian branch (the limit-of-modulus
/// criterion, with the weighted-degree criterion as a cross-check on
/// non-tangential branches rooted on first-type faces).
BranchReport branch_report(const Polynomial& f, const Polynomial& g, const PuiseuxBranch& b,
                           double tol = 1e-9);

enum class FibrationVerdictKind { guaranteed, obstructed, no_obstruction_found, inconclusive };

std::string to_string(FibrationVerdictKind v);

struct FibrationOptions {
    std::int64_t truncation = 12;
    double tol = 1e-9;
};

struct FibrationReport {
    bool convenient = false;                         // both inputs convenient
    std::optional<MultiplicityVerdict> multiplicity; // absent when not applicable
    bool nondeg_f = false, nondeg_g = false, nondeg_pair = false;
    Polynomial J;
    std::vector<BranchReport> reports;               // Jacobian branches, in branch order
    FibrationVerdictKind verdict = FibrationVerdictKind::inconclusive;
    std::string instrument;
    std::string note;
};

/// Overall fibration-obstruction verdict for H = f * conj(g).
FibrationReport fibration_verdict(const Polynomial& f, const Polynomial& g,
                                  const FibrationOptions& opt = {});

/// 2k crossings of |rho| = 1 on the circle |t| = r, computed symbolically
/// from the series: k = ord(rho - rho(0)). Preconditions: |rho(0)| = 1
/// within tol, rho non-constant, and |a_k| r^k dominates the known tail by
/// a factor >= 4 (throws otherwise).
std::int64_t count_unit_circle_crossings(const ComplexSeries& rho, double r, double tol = 1e-9);

struct CircleSample {
    std::int64_t crossings = 0;
    bool constant_modulus = false; // |sigma| = 1 everywhere on the circle
    struct Witness {
        double theta = 0;
        std::complex<double> z1, z2; // the refined point on the branch
        double sigma_modulus = 0;
        double prop1_residual = 0;   // min over unit alpha of |conj(dH) - alpha*dbarH|/|dH|
    };
    std::vector<Witness> witnesses;
};

/// Numeric corroboration: sample |sigma| on the circle t = r e^{i theta}
/// along the branch, count unit-modulus crossings, refine each by
/// bisection and report the critical-point residual there.
CircleSample sample_circle(const Polynomial& f, const Polynomial& g, const PuiseuxBranch& b,
                           double r, std::int64_t samples);

} // namespace milnor

#endif
