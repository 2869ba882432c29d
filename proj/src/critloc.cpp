#include "milnor/critloc.hpp"

#include "milnor/bipoly.hpp"

#include <algorithm>
#include <cmath>

namespace milnor {

Polynomial jacobian(const Polynomial& f, const Polynomial& g)
{
    if (f.nvars() != 2 || g.nvars() != 2)
        throw precondition_error("jacobian: needs two variables");
    if (f.variables() != g.variables())
        throw precondition_error("jacobian: variable-list mismatch");
    const auto& v = f.variables();
    return differentiate(f, v[0]) * differentiate(g, v[1]) -
           differentiate(f, v[1]) * differentiate(g, v[0]);
}

std::vector<FaceClass> classify_faces(const Polynomial& J, const Polynomial& f,
                                      const Polynomial& g)
{
    if (J.is_zero()) throw precondition_error("classify_faces: zero Jacobian");
    const NewtonData nd = newton_boundary(J);

    // representative strictly positive normals: canonical for edges, the sum
    // of the adjacent facet normals for vertices (coordinate facets at the
    // chain ends)
    std::vector<std::pair<WeightVector, bool>> probes; // (normal, is_edge)
    for (const auto& face : nd.faces) probes.push_back({face.normal, true});
    const auto& chain = nd.polygon.vertices; // x ascending
    for (std::size_t i = 0; i < chain.size(); ++i) {
        std::int64_t p = 0, q = 0;
        if (i == 0) { p += 1; q += 0; } // facet x >= min
        if (i + 1 == chain.size()) { p += 0; q += 1; } // facet y >= min
        for (const auto& e : nd.polygon.edges) {
            if ((e.from == chain[i]) || (e.to == chain[i])) {
                p += e.p;
                q += e.q;
            }
        }
        probes.push_back({WeightVector({p, q}), false});
    }

    std::vector<FaceClass> out;
    for (const auto& [P, is_edge] : probes) {
        FaceClass fc;
        fc.normal = P;
        fc.is_edge = is_edge;
        fc.d_J = weighted_degree(P, J);
        fc.d_f = weighted_degree(P, f);
        fc.d_g = weighted_degree(P, g);
        const Polynomial JP = face_function(J, P).f_P;
        const Polynomial fP = face_function(f, P).f_P;
        const Polynomial gP = face_function(g, P).f_P;
        const Polynomial Jface = jacobian(fP, gP);
        const std::int64_t expected = fc.d_f + fc.d_g - (P[0] + P[1]);
        const bool identity_first = (JP == Jface);
        const bool degree_first = (fc.d_J == expected);
        if (identity_first != degree_first)
            throw truncation_error("classify_faces: polynomial-identity and degree "
                                   "characterizations disagree (internal)");
        if (identity_first) {
            fc.kind = FaceClass::Kind::first_type;
        } else {
            if (!Jface.is_zero() || fc.d_J <= expected)
                throw truncation_error("classify_faces: hidden face without vanishing "
                                       "face Jacobian (internal)");
            fc.kind = FaceClass::Kind::hidden;
        }
        out.push_back(std::move(fc));
    }
    return out;
}

std::string to_string(BranchVerdict v)
{
    switch (v) {
    case BranchVerdict::critical_curve_constant_modulus: return "critical-curve-constant-modulus";
    case BranchVerdict::critical_curve_2k_rays: return "critical-curve-2k-rays";
    case BranchVerdict::no_critical_curve: return "no-critical-curve";
    case BranchVerdict::in_zero_set: return "in-V(H)";
    case BranchVerdict::undecided: return "undecided";
    }
    return "?";
}

std::string to_string(FibrationVerdictKind v)
{
    switch (v) {
    case FibrationVerdictKind::guaranteed: return "guaranteed";
    case FibrationVerdictKind::obstructed: return "obstructed";
    case FibrationVerdictKind::no_obstruction_found: return "no-obstruction-found";
    case FibrationVerdictKind::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

/// Does the branch lie inside V(h)? Decided through the factor split
/// J = G * J1 with G = gcd(J, h): a branch of J lies in V(h) exactly when
/// it is a branch of G, and one of G, J1 must reveal a nonzero
/// composition at finite order.
enum class Membership { inside, outside, unknown };

Membership branch_in_zero_set(const Polynomial& h, const PuiseuxBranch& b,
                              const Polynomial& J_reduced)
{
    if (b.kind == PuiseuxBranch::Kind::axis_x)
        return h.min_exponent(0) > 0 ? Membership::inside : Membership::outside;
    if (b.kind == PuiseuxBranch::Kind::axis_y)
        return h.min_exponent(1) > 0 ? Membership::inside : Membership::outside;

    const Polynomial G = bipoly_gcd(J_reduced, h);
    if (G.has_constant_term() || G.total_degree() < 1) return Membership::outside;
    const Polynomial J1 = divide_exact(J_reduced, G);

    const ComplexSeries alongG = compose_series(G, {b.x, b.y}, kTruncInf);
    if (alongG.order().has_value()) return Membership::outside; // G does not vanish on b
    if (!J1.is_zero() && J1.total_degree() >= 1) {
        const ComplexSeries alongJ1 = compose_series(J1, {b.x, b.y}, kTruncInf);
        if (alongJ1.order().has_value()) return Membership::inside; // b sits in V(G) ⊆ V(h)
    } else {
        return Membership::inside; // J1 constant: J essentially equals G
    }
    return Membership::unknown;
}

struct SigmaData {
    char var = 'x';
    ComplexSeries num, den, sigma;
    bool both_admissible = false;
};

/// sigma(t) = (f_{z_j} g) / (g_{z_j} f) along the branch, j chosen so that
/// g_{z_j} is not identically zero along it.
SigmaData sigma_along(const Polynomial& f, const Polynomial& g, const PuiseuxBranch& b,
                      std::int64_t horizon)
{
    const auto& vars = f.variables();
    const std::vector<ComplexSeries> z = {b.x, b.y};
    const ComplexSeries gx = compose_series(differentiate(g, vars[0]), z, kTruncInf);
    const ComplexSeries gy = compose_series(differentiate(g, vars[1]), z, kTruncInf);
    const bool x_ok = gx.order().has_value();
    const bool y_ok = gy.order().has_value();
    if (!x_ok && !y_ok)
        throw truncation_error("sigma: both partials of g vanish along the branch "
                               "to the reliable truncation");
    SigmaData sd;
    sd.var = x_ok ? 'x' : 'y';
    sd.both_admissible = x_ok && y_ok;
    const std::string dvar = x_ok ? vars[0] : vars[1];
    const ComplexSeries fj = compose_series(differentiate(f, dvar), z, kTruncInf);
    const ComplexSeries gj = x_ok ? gx : gy;
    const ComplexSeries fc = compose_series(f, z, kTruncInf);
    const ComplexSeries gc = compose_series(g, z, kTruncInf);
    sd.num = fj * gc;
    sd.den = gj * fc;
    if (!sd.den.is_zero_to_trunc()) sd.sigma = series_ratio(sd.num, sd.den, horizon);
    return sd;
}

} // namespace

BranchReport branch_report(const Polynomial& f, const Polynomial& g, const PuiseuxBranch& b,
                           double tol)
{
    if (f.nvars() != 2 || g.nvars() != 2)
        throw precondition_error("branch_report: needs two variables");
    BranchReport rep;
    rep.branch = b;

    const Polynomial J = jacobian(f, g);
    Polynomial J_core = J;
    {
        const std::int64_t ax = J.min_exponent(0), ay = J.min_exponent(1);
        if (ax > 0) J_core = J_core.shift_down(0, ax);
        if (ay > 0) J_core = J_core.shift_down(1, ay);
        if (!J_core.has_constant_term() && !J_core.is_zero())
            J_core = squarefree_germ(J_core);
    }

    const Membership mf = branch_in_zero_set(f, b, J_core);
    const Membership mg = branch_in_zero_set(g, b, J_core);
    if (mf == Membership::unknown || mg == Membership::unknown) {
        rep.verdict = BranchVerdict::undecided;
        rep.note = "membership in V(H) undecidable at this truncation";
        return rep;
    }
    rep.in_Vf = mf == Membership::inside;
    rep.in_Vg = mg == Membership::inside;
    if (rep.in_VH()) {
        rep.verdict = BranchVerdict::in_zero_set;
        rep.instrument = "zero-set membership (limit test requires the branch off V(H))";
        return rep;
    }

    // face data and tangency for regular branches
    if (b.kind == PuiseuxBranch::Kind::regular) {
        const WeightVector P({b.p, b.q});
        rep.df = weighted_degree(P, f);
        rep.dg = weighted_degree(P, g);
        for (const auto& fc : classify_faces(J, f, g)) {
            if (fc.is_edge && fc.normal == P) rep.face_kind = fc.kind;
        }
        const Polynomial fP = face_function(f, P).f_P;
        const Polynomial gP = face_function(g, P).f_P;
        const Coeff one = Coeff(Rational(1));
        const Coeff fval = evaluate_coeff(fP, {one, b.alpha});
        const Coeff gval = evaluate_coeff(gP, {one, b.alpha});
        if (fval.exact() && gval.exact()) {
            rep.non_tangential = !fval.is_zero() && !gval.is_zero();
        } else if (!fval.negligible() && !gval.negligible()) {
            rep.non_tangential = true;
        } else if (fval.is_zero() || gval.is_zero()) {
            rep.non_tangential = false;
        } // else: numerically ambiguous, leave undetermined
    }

    const std::int64_t horizon = 2 * std::max<std::int64_t>(b.truncation, 8) + 16;
    SigmaData sd;
    try {
        sd = sigma_along(f, g, b, horizon);
    } catch (const truncation_error& e) {
        rep.verdict = BranchVerdict::undecided;
        rep.note = e.what();
        return rep;
    }
    rep.sigma_var = sd.var;
    rep.sigma = sd.sigma;

    if (sd.den.is_zero_to_trunc()) {
        rep.verdict = BranchVerdict::undecided;
        rep.note = "denominator of sigma vanishes to the reliable truncation";
        return rep;
    }
    const std::int64_t den_ord = *sd.den.order();

    if (!sd.num.order().has_value()) {
        // numerator vanishes to its truncation: sigma -> 0 provided the
        // lower bound on its order is positive
        const std::int64_t lower = sd.num.trunc() - den_ord;
        rep.sigma_order_lower_bound = lower;
        if (lower > 0) {
            rep.verdict = BranchVerdict::no_critical_curve;
            rep.instrument = "sigma-limit (limit is 0: order > 0)";
            rep.note = "numerator vanishes to reliable truncation";
        } else {
            rep.verdict = BranchVerdict::undecided;
            rep.note = "sigma order undetermined at this truncation";
        }
        return rep;
    }

    const std::int64_t order = *sd.num.order() - den_ord;
    rep.sigma_order = order;
    if (order != 0) {
        rep.verdict = BranchVerdict::no_critical_curve;
        rep.instrument = order > 0 ? "sigma-limit (limit is 0)" : "sigma-limit (limit is infinite)";
    } else {
        const Coeff s0 = sd.num.leading() / sd.den.leading();
        rep.sigma0 = s0;
        rep.sigma0_modulus = s0.abs();
        rep.sigma0_exact = s0.exact();
        bool unit;
        if (s0.exact()) {
            unit = s0.abs2_exact() == 1;
            rep.note = unit ? "unit modulus exact" : "non-unit modulus exact";
        } else {
            const double margin = std::abs(s0.abs() - 1.0);
            unit = margin <= tol;
            rep.note = "modulus margin " + std::to_string(margin) +
                       (unit ? " <= " : " > ") + std::to_string(tol);
        }
        if (!unit) {
            rep.verdict = BranchVerdict::no_critical_curve;
            rep.instrument = "sigma-limit (modulus differs from 1)";
        } else {
            // contact order of sigma - sigma(0)
            ComplexSeries tail = sd.sigma - ComplexSeries::monomial(s0, 0);
            std::optional<std::int64_t> k;
            if (auto o = tail.order()) {
                if (*o > 0) k = *o;
            }
            if (k) {
                rep.contact_k = k;
                rep.verdict = BranchVerdict::critical_curve_2k_rays;
                rep.instrument = "sigma-limit + 2k-ray count";
            } else {
                // constant to reliability; certify exactly when possible
                const bool exact_pair = sd.num.is_exact_polynomial() && sd.den.is_exact_polynomial();
                if (exact_pair && (sd.num - sd.den.scaled(s0)).is_zero_to_trunc() &&
                    (sd.num - sd.den.scaled(s0)).trunc() >= kTruncInf) {
                    rep.verdict = BranchVerdict::critical_curve_constant_modulus;
                    rep.instrument = "constant-sigma certificate (exact)";
                } else {
                    rep.verdict = BranchVerdict::undecided;
                    rep.note = "sigma constant to truncation; constancy not certified";
                }
            }
        }
    }

    // cross-check against the weighted-degree criterion where it applies
    if (b.kind == PuiseuxBranch::Kind::regular && rep.face_kind == FaceClass::Kind::first_type &&
        rep.non_tangential == true && rep.verdict != BranchVerdict::undecided) {
        const bool theorem_critical = (*rep.df == *rep.dg);
        const bool sigma_critical = rep.verdict == BranchVerdict::critical_curve_2k_rays ||
                                    rep.verdict == BranchVerdict::critical_curve_constant_modulus;
        if (theorem_critical != sigma_critical)
            throw truncation_error("branch_report: weighted-degree criterion disagrees with "
                                   "the sigma limit (internal)");
        rep.instrument += " + weighted-degree cross-check";
    }
    return rep;
}

FibrationReport fibration_verdict(const Polynomial& f, const Polynomial& g,
                                  const FibrationOptions& opt)
{
    if (f.nvars() != 2 || g.nvars() != 2)
        throw precondition_error("fibration_verdict: needs two variables");
    if (f.is_zero() || g.is_zero())
        throw precondition_error("fibration_verdict: zero input");
    if (has_common_germ_factor(f, g))
        throw precondition_error("fibration_verdict: f and g share a factor through the origin");

    FibrationReport rep;
    const NewtonData nf = newton_boundary(f);
    const NewtonData ng = newton_boundary(g);
    rep.convenient = nf.convenient && ng.convenient;
    rep.nondeg_f = nondegeneracy_2d(f).nondegenerate;
    rep.nondeg_g = nondegeneracy_2d(g).nondegenerate;
    rep.nondeg_pair = pair_nondegeneracy_2d(f, g);

    if (rep.convenient) rep.multiplicity = multiplicity_condition(f, g);

    if (rep.multiplicity && rep.multiplicity->satisfied) {
        if (rep.nondeg_f && rep.nondeg_g && rep.nondeg_pair) {
            rep.verdict = FibrationVerdictKind::guaranteed;
            rep.instrument = "Newton multiplicity condition + non-degeneracy: "
                             "tubular and spherical Milnor fibrations exist";
        } else {
            rep.verdict = FibrationVerdictKind::inconclusive;
            rep.instrument = "multiplicity condition holds but non-degeneracy failed; "
                             "the guarantee needs both";
        }
        return rep;
    }

    rep.J = jacobian(f, g);
    if (rep.J.is_zero()) {
        rep.verdict = FibrationVerdictKind::inconclusive;
        rep.note = "Jacobian vanishes identically (dependent pair)";
        return rep;
    }
    BranchesResult br;
    if (rep.J.has_constant_term()) {
        // J is a unit at the origin: no Jacobian branches through 0 at all
        rep.verdict = FibrationVerdictKind::no_obstruction_found;
        rep.instrument = "Jacobian curve misses the origin";
        return rep;
    }
    br = branches(rep.J, opt.truncation);

    bool obstructed = false, undecided = false;
    for (const auto& b : br.branches) {
        BranchReport r = branch_report(f, g, b, opt.tol);
        switch (r.verdict) {
        case BranchVerdict::critical_curve_constant_modulus:
        case BranchVerdict::critical_curve_2k_rays: obstructed = true; break;
        case BranchVerdict::undecided: undecided = true; break;
        default: break;
        }
        rep.reports.push_back(std::move(r));
    }
    if (obstructed) {
        rep.verdict = FibrationVerdictKind::obstructed;
        rep.instrument = "non-constant critical curve on a Jacobian branch; "
                         "no tubular Milnor fibration";
    } else if (undecided) {
        rep.verdict = FibrationVerdictKind::inconclusive;
        rep.instrument = "at least one Jacobian branch left undecided";
    } else {
        rep.verdict = FibrationVerdictKind::no_obstruction_found;
        rep.instrument = "no critical curve on any Jacobian branch";
        rep.note = "survey of Jacobian branches; the critical locus is contained in the "
                   "Jacobian curve, so this is the necessary-condition route, not a full converse";
    }
    return rep;
}

std::int64_t count_unit_circle_crossings(const ComplexSeries& rho, double r, double tol)
{
    if (!rho.order().has_value() || *rho.order() != 0)
        throw precondition_error("crossings: rho(0) must be a unit-modulus constant term");
    const Coeff a0 = rho.leading();
    const bool unit = a0.exact() ? (a0.abs2_exact() == 1) : std::abs(a0.abs() - 1.0) <= tol;
    if (!unit) throw precondition_error("crossings: |rho(0)| != 1");
    ComplexSeries tail = rho - ComplexSeries::monomial(a0, 0);
    const auto k = tail.order();
    if (!k || *k <= 0)
        throw precondition_error("crossings: rho is constant to its truncation");
    const double ak = tail.leading().abs();
    double rest = 0.0;
    for (const auto& [e, c] : tail.coefficients())
        if (e > *k) rest += c.abs() * std::pow(r, double(e));
    if (!(ak * std::pow(r, double(*k)) >= 4.0 * rest))
        throw precondition_error("crossings: r too large for the dominance bound");
    return 2 * *k;
}

CircleSample sample_circle(const Polynomial& f, const Polynomial& g, const PuiseuxBranch& b,
                           double r, std::int64_t samples)
{
    if (samples < 256) throw precondition_error("sample_circle: need at least 256 samples");
    const auto& vars = f.variables();
    const Polynomial fx = differentiate(f, vars[0]);
    const Polynomial fy = differentiate(f, vars[1]);
    const Polynomial gx = differentiate(g, vars[0]);
    const Polynomial gy = differentiate(g, vars[1]);

    // same j-selection as the series-based report
    char var = 'x';
    {
        const std::vector<ComplexSeries> z = {b.x, b.y};
        if (!compose_series(gx, z, kTruncInf).order().has_value()) var = 'y';
    }
    const Polynomial& fj = (var == 'x') ? fx : fy;
    const Polynomial& gj = (var == 'x') ? gx : gy;

    auto point = [&](std::complex<double> t) {
        return std::vector<std::complex<double>>{b.x.evaluate(t), b.y.evaluate(t)};
    };
    auto sigma_mod = [&](double theta) {
        const std::complex<double> t = std::polar(r, theta);
        const auto z = point(t);
        const auto num = evaluate_complex(fj, z) * evaluate_complex(g, z);
        const auto den = evaluate_complex(gj, z) * evaluate_complex(f, z);
        return std::abs(num) / std::abs(den);
    };

    CircleSample out;
    const double two_pi = 2.0 * std::acos(-1.0);
    std::vector<double> vals(samples);
    double maxdev = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        vals[i] = sigma_mod(two_pi * double(i) / double(samples)) - 1.0;
        maxdev = std::max(maxdev, std::abs(vals[i]));
    }
    if (maxdev <= 1e-9) {
        out.constant_modulus = true;
        return out;
    }

    for (std::int64_t i = 0; i < samples; ++i) {
        const double a = vals[i];
        const double c = vals[(i + 1) % samples];
        if (a == 0.0 || a * c >= 0) continue;
        double lo = two_pi * double(i) / double(samples);
        double hi = two_pi * double(i + 1) / double(samples);
        double flo = a;
        for (int step = 0; step < 64; ++step) {
            const double mid = 0.5 * (lo + hi);
            const double fm = sigma_mod(mid) - 1.0;
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        const double theta = 0.5 * (lo + hi);
        CircleSample::Witness w;
        w.theta = theta;
        const std::complex<double> t = std::polar(r, theta);
        const auto z = point(t);
        w.z1 = z[0];
        w.z2 = z[1];
        w.sigma_modulus = sigma_mod(theta);
        // residual of the critical-point criterion: conj(dH) = alpha dbarH
        const std::complex<double> u1 = std::conj(evaluate_complex(fx, z)) * evaluate_complex(g, z);
        const std::complex<double> u2 = std::conj(evaluate_complex(fy, z)) * evaluate_complex(g, z);
        const std::complex<double> v1 = evaluate_complex(f, z) * std::conj(evaluate_complex(gx, z));
        const std::complex<double> v2 = evaluate_complex(f, z) * std::conj(evaluate_complex(gy, z));
        const std::complex<double> inner = u1 * std::conj(v1) + u2 * std::conj(v2);
        const double unorm = std::sqrt(std::norm(u1) + std::norm(u2));
        std::complex<double> alpha = inner / std::abs(inner);
        const double resid =
            std::sqrt(std::norm(u1 - alpha * v1) + std::norm(u2 - alpha * v2)) / unorm;
        w.prop1_residual = resid;
        out.witnesses.push_back(w);
        ++out.crossings;
    }
    return out;
}

} // namespace milnor
